#pragma once

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "symbidisc/domain.hpp"

// Canonical complex geodesics of G, the h_m parametrization, construction
// through two points or through a point with a direction, standard position,
// the tau arc, royal points and the five-type classification.

namespace symbidisc {

enum class GeodesicType { Royal, Flat, PurelyBalanced, Exceptional, PurelyUnbalanced };

// h_m(z) = (z + m(z), z m(z)); parametrizes a geodesic B_m when m is not
// elliptic.
inline GPoint h_eval(const MoebiusAut& m, Complex z) {
    const Complex w = m(z);
    return {z + w, z * w};
}

// h_m'(z) = (1 + m'(z), m(z) + z m'(z))
inline Direction h_tangent(const MoebiusAut& m, Complex z) {
    const Complex d = m.derivative(z);
    return Direction(1.0 + d, m(z) + z * d);
}

// A geodesic in canonical form: Flat(beta), or B_m with m non-elliptic.
// Since B_m = B_{m^{-1}}, the representative of {m, m^{-1}} with the
// lexicographically larger (Re alpha, Im alpha) is kept, ties resolved by
// the smaller arg tau in [0, 2 pi).  Royal = B_identity.
struct Geodesic {
    enum class Kind { Flat, Bm };
    Kind kind = Kind::Flat;
    Complex beta{0.0, 0.0};   // Flat
    MoebiusAut m{};           // Bm
    GeodesicType type = GeodesicType::Flat;
};

inline Geodesic make_flat(Complex beta) {
    Geodesic g;
    g.kind = Geodesic::Kind::Flat;
    g.beta = beta;
    g.type = GeodesicType::Flat;
    return g;
}

inline Geodesic make_bm(const MoebiusAut& m_in, const Tolerances& tol = {}) {
    const AutClass cls = classify(m_in, tol);
    if (cls == AutClass::Elliptic)
        throw std::invalid_argument("make_bm: elliptic automorphism does not parametrize a geodesic");
    const MoebiusAut mi = inverse(m_in);
    const auto key = [](const MoebiusAut& a) {
        return std::tuple{std::real(a.alpha), std::imag(a.alpha), -arg_2pi(a.tau)};
    };
    Geodesic g;
    g.kind = Geodesic::Kind::Bm;
    g.m = key(m_in) >= key(mi) ? m_in : mi;
    switch (cls) {
        case AutClass::Identity: g.type = GeodesicType::Royal; break;
        case AutClass::Hyperbolic: g.type = GeodesicType::PurelyBalanced; break;
        default: g.type = GeodesicType::Exceptional; break;
    }
    return g;
}

inline GPoint geo_eval(const Geodesic& g, Complex z) {
    return g.kind == Geodesic::Kind::Flat ? flat_point(g.beta, z) : h_eval(g.m, z);
}

inline Direction geo_tangent(const Geodesic& g, Complex z) {
    if (g.kind == Geodesic::Kind::Flat)
        return Direction(std::conj(g.beta), Complex{1.0, 0.0});
    return h_tangent(g.m, z);
}

// Parameter of a point on a geodesic, or nullopt when the point misses it.
// For B_m the lift of the point must be matched by m in one of the two
// orders.
inline std::optional<Complex> find_parameter(const Geodesic& g, const GPoint& pt,
                                             const Tolerances& tol = {}) {
    if (g.kind == Geodesic::Kind::Flat) {
        if (std::abs(pt.s - (g.beta + std::conj(g.beta) * pt.p)) > 10.0 * tol.on_geodesic_tol)
            return std::nullopt;
        return pt.p;
    }
    const auto [a, b] = lift(pt);
    if (std::abs(g.m(a) - b) <= 10.0 * tol.on_geodesic_tol) return a;
    if (std::abs(g.m(b) - a) <= 10.0 * tol.on_geodesic_tol) return b;
    return std::nullopt;
}

// Geodesics compare equal up to the m <-> m^{-1} ambiguity.
inline bool geodesics_equal(const Geodesic& a, const Geodesic& b, double eps = 1e-9) {
    if (a.kind != b.kind) return false;
    if (a.kind == Geodesic::Kind::Flat) return std::abs(a.beta - b.beta) <= eps;
    return aut_distance(a.m, b.m) <= eps || aut_distance(a.m, inverse(b.m)) <= eps;
}

// gamma_b(B_m) = B_{b m b^{-1}}; flats map to flats.
inline Geodesic conjugate_geodesic(const Geodesic& g, const MoebiusAut& b,
                                   const Tolerances& tol = {}) {
    if (g.kind == Geodesic::Kind::Flat)
        return make_flat(flat_coordinate(apply_aut(b, flat_point(g.beta, Complex{0.0, 0.0}))));
    return make_bm(compose(compose(b, g.m), inverse(b)), tol);
}

// Royal points D^- /\ R^-.  A hyperbolic B_m has the two edge points over
// the fixed points of m, a parabolic one has one, the royal geodesic is all
// of R, and a flat F^beta has a unique interior royal point, the root in D
// of conj(beta)^2 z^2 + 2(|beta|^2 - 2) z + beta^2 = 0.
struct RoyalPoints {
    bool whole_royal = false;
    std::vector<GPoint> points;
};

inline RoyalPoints royal_points(const Geodesic& g, const Tolerances& tol = {}) {
    if (g.kind == Geodesic::Kind::Bm) {
        if (g.type == GeodesicType::Royal) return {true, {}};
        RoyalPoints out;
        for (const Complex eta : fixed_points(g.m, tol))
            out.points.push_back(royal_point(eta));
        return out;
    }
    const Complex beta = g.beta;
    const Complex a = std::conj(beta) * std::conj(beta);
    const Complex b = 2.0 * (std::norm(beta) - 2.0);
    const Complex c = beta * beta;
    Complex z0{0.0, 0.0};
    for (const Complex r : detail::solve_quadratic(a, b, c))
        if (std::abs(r) < 1.0) z0 = r;
    return {false, {flat_point(beta, z0)}};
}

// The parabolic endpoints tau_sigma^{+-} of the purely balanced tau-range:
// |(tau - 1)/(tau + 1)| = 2 sigma/(1 - sigma^2) at tau = e^{+-i theta} with
// theta = 2 atan(2 sigma/(1 - sigma^2)).
struct TauArc {
    double sigma = 0.0;
    Complex tau_plus{1.0, 0.0};
    Complex tau_minus{1.0, 0.0};
    double theta = 0.0;
};

inline TauArc tau_arc(double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("tau_arc: sigma outside (0,1)");
    const double theta = 2.0 * std::atan(2.0 * sigma / (1.0 - sigma * sigma));
    return {sigma, std::polar(1.0, theta), std::polar(1.0, -theta), theta};
}

// m_{sigma,tau} = b_sigma . r_tau . b_sigma, the standard-position family
// through (0, -sigma^2).
inline MoebiusAut standard_aut(double sigma, Complex tau) {
    const MoebiusAut bs = MoebiusAut::blaschke(Complex{sigma, 0.0});
    return compose(compose(bs, MoebiusAut::rotation(tau)), bs);
}

// Automorphism carrying a non-royal point to (0, -sigma^2), where sigma in
// (0,1) halves the Poincare distance between the lift components:
// sigma = tanh(rho/2) with rho = poincare(z1, z2).
struct StandardPosition {
    MoebiusAut b;
    double sigma = 0.0;
};

inline StandardPosition standard_position(const GPoint& g, const Tolerances& tol = {}) {
    if (is_royal(g, tol))
        throw std::domain_error("standard_position: royal point has no standard position");
    const auto [z1, z2] = lift(g);
    const double t = std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
    const double sigma = t / (1.0 + std::sqrt(1.0 - t * t));
    const auto b = connecting_aut(z1, Complex{sigma, 0.0}, z2, Complex{-sigma, 0.0}, tol);
    if (!b)
        throw std::runtime_error("standard_position: connecting automorphism not found");
    return {*b, sigma};
}

enum class DirectionClass {
    Flat,
    SharpBalanced,
    PurelyBalanced,
    Exceptional,
    PurelyUnbalanced,
    RoyalSharp,
};

struct DirectionInfo {
    DirectionClass cls = DirectionClass::PurelyUnbalanced;
    std::optional<Complex> tau;   // diagnostic, from the standard-position frame
    std::optional<double> sigma;
};

// Classifies a direction at a point.  Off the royal variety the direction is
// pushed to standard position; with w the tangent slope there, the display
// h'_{m_{sigma,tau}}(sigma) = (1 + tau, -sigma (1 - tau)) inverts to
// tau = (sigma + w)/(sigma - w), and tau's location relative to the unit
// circle and the arc (tau^-, tau^+) through 1 decides the type.
inline DirectionInfo direction_type(const GPoint& g, const Direction& v,
                                    const Tolerances& tol = {}) {
    if (is_royal(g, tol)) {
        const Complex z = royal_parameter(g);
        if (parallel(v, flat_direction(g), tol)) return {DirectionClass::Flat, {}, {}};
        if (parallel(v, Direction(Complex{1.0, 0.0}, z), tol))
            return {DirectionClass::RoyalSharp, {}, {}};
        return {DirectionClass::PurelyUnbalanced, {}, {}};
    }
    const StandardPosition sp = standard_position(g, tol);
    const auto [w1, w2] = aut_jacobian(sp.b, g, tol).apply(v.v1, v.v2);
    const double sigma = sp.sigma;
    if (std::abs(w1) <= tol.dir_eps * std::sqrt(std::norm(w1) + std::norm(w2)))
        return {DirectionClass::Flat, {}, sigma};
    const Complex w = w2 / w1;
    if (std::abs(sigma - w) == 0.0)
        return {DirectionClass::PurelyUnbalanced, {}, sigma};
    Complex tau = (sigma + w) / (sigma - w);
    if (std::abs(std::abs(tau) - 1.0) > tol.circle_tol)
        return {DirectionClass::PurelyUnbalanced, tau, sigma};
    tau = unit(tau);
    const double theta = tau_arc(sigma).theta;
    const double a = std::arg(tau);
    if (std::abs(a - theta) <= tol.arc_tol || std::abs(a + theta) <= tol.arc_tol)
        return {DirectionClass::Exceptional, tau, sigma};
    if (std::abs(a) <= tol.arc_tol) return {DirectionClass::SharpBalanced, tau, sigma};
    if (std::abs(a) < theta) return {DirectionClass::PurelyBalanced, tau, sigma};
    return {DirectionClass::PurelyUnbalanced, tau, sigma};
}

// Result of a construction that may or may not carry a parametrization.
// Purely unbalanced geodesics are classified but never parametrized; for
// point pairs an elliptic witness is reported when one exists.
struct ConnectResult {
    GeodesicType type = GeodesicType::PurelyUnbalanced;
    std::optional<Geodesic> geodesic;
    std::optional<MoebiusAut> witness;
};

// The unique geodesic through a point with a prescribed tangent direction.
inline ConnectResult through_direction(const GPoint& g, const Direction& v,
                                       const Tolerances& tol = {}) {
    const DirectionInfo info = direction_type(g, v, tol);
    switch (info.cls) {
        case DirectionClass::Flat:
            return {GeodesicType::Flat, make_flat(flat_coordinate(g)), {}};
        case DirectionClass::RoyalSharp:
            return {GeodesicType::Royal, make_bm(MoebiusAut::identity(), tol), {}};
        case DirectionClass::PurelyUnbalanced:
            return {GeodesicType::PurelyUnbalanced, {}, {}};
        default:
            break;
    }
    const StandardPosition sp = standard_position(g, tol);
    const MoebiusAut m = compose(compose(inverse(sp.b), standard_aut(sp.sigma, *info.tau)), sp.b);
    const Geodesic geo = make_bm(m, tol);
    return {geo.type, geo, {}};
}

// The unique geodesic through two distinct points.  Decision ladder: royal
// pair, common flat coordinate, a non-elliptic automorphism matching the two
// lifts in either order, else purely unbalanced (keeping any elliptic
// witness found on the way).
inline ConnectResult connect(const GPoint& a, const GPoint& b, const Tolerances& tol = {}) {
    if (gpoint_distance(a, b) <= 1e-13)
        throw std::invalid_argument("connect: points coincide");
    const auto [a1, a2] = lift(a);
    const auto [c1, c2] = lift(b);
    if (std::abs(a1 - a2) < tol.royal_lift_gap && std::abs(c1 - c2) < tol.royal_lift_gap)
        return {GeodesicType::Royal, make_bm(MoebiusAut::identity(), tol), {}};
    const Complex beta = flat_coordinate(a);
    if (std::abs(beta - flat_coordinate(b)) <= tol.on_geodesic_tol)
        return {GeodesicType::Flat, make_flat(beta), {}};
    std::optional<MoebiusAut> witness;
    for (const auto& [x, y] : {std::pair{c1, c2}, std::pair{c2, c1}}) {
        const auto m = connecting_aut(a1, a2, x, y, tol);
        if (!m) continue;
        if (classify(*m, tol) != AutClass::Elliptic) {
            const Geodesic geo = make_bm(*m, tol);
            return {geo.type, geo, {}};
        }
        if (!witness) witness = *m;
    }
    return {GeodesicType::PurelyUnbalanced, {}, witness};
}

} // namespace symbidisc
