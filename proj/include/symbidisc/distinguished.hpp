#pragma once

#include <stdexcept>
#include <utility>

#include "symbidisc/geodesic.hpp"

// Sharp-point sets of geodesics, the distinguished real geodesics Xi_B, and
// the chart of G \ R by (edge pair, t, u).  The purely balanced
// distinguished geodesics foliate G \ R: through every non-royal point there
// is exactly one Xi_B, namely the sharp-point set of the sharp-direction
// geodesic through the point.

namespace symbidisc {

// Xi_B = h_m(C_eta), the simple real geodesic inside a purely balanced B_m
// joining its two royal points (eta the fixed-point pair of m).  Independent
// of the choice m vs m^{-1}.
struct XiCurve {
    MoebiusAut m;
    BoundaryGeodesic arc;

    GPoint operator()(double x) const { return h_eval(m, arc(x)); }
};

inline XiCurve xi_curve(const Geodesic& B, const Tolerances& tol = {}) {
    if (B.kind != Geodesic::Kind::Bm || B.type != GeodesicType::PurelyBalanced)
        throw std::invalid_argument("xi_curve: base geodesic must be purely balanced");
    const auto eta = fixed_points(B.m, tol);
    return {B.m, boundary_geodesic(eta[0], eta[1], tol)};
}

// The royal counterpart: x -> (2 c(x), c(x)^2) over a real disc geodesic c
// with boundary endpoints.  Constructible, but not part of the chart (the
// chart covers G \ R only).
struct RoyalXiCurve {
    BoundaryGeodesic arc;

    GPoint operator()(double x) const { return royal_point(arc(x)); }
};

inline RoyalXiCurve royal_distinguished(Complex eta1, Complex eta2,
                                        const Tolerances& tol = {}) {
    return {boundary_geodesic(eta1, eta2, tol)};
}

// Whether a point of D is a sharp point in D, i.e. the tangent of D there is
// the sharp direction.  Always true on the royal geodesic, never on a flat
// one; on a purely balanced B the sharp points are exactly Xi_B.
inline bool is_sharp_point(const Geodesic& D, const GPoint& g, const Tolerances& tol = {}) {
    if (D.kind == Geodesic::Kind::Bm && D.type == GeodesicType::Royal) {
        if (!is_royal(g, tol))
            throw std::invalid_argument("is_sharp_point: point not on geodesic");
        return true;
    }
    const auto z = find_parameter(D, g, tol);
    if (!z) throw std::invalid_argument("is_sharp_point: point not on geodesic");
    if (D.kind == Geodesic::Kind::Flat) return false;
    return projective_gap(h_tangent(D.m, *z), sharp_direction(g)) <= tol.sharp_tol;
}

// Coordinates of a non-royal point: the edge pair of its distinguished
// geodesic (ordered by ascending argument in [0, 2 pi)), the parameter
// t = r in (0,1) of the conjugated representative b_r, and the affine
// position u in (0,1) along the conjugated curve.
struct ChartCoord {
    Complex eta1{1.0, 0.0};
    Complex eta2{-1.0, 0.0};
    double t = 0.0;
    double u = 0.0;
};

inline ChartCoord chart(const GPoint& g, const Tolerances& tol = {}) {
    if (is_royal(g, tol))
        throw std::domain_error("chart: royal points are outside the chart domain");
    const auto cr = through_direction(g, sharp_direction(g), tol);
    if (cr.type != GeodesicType::PurelyBalanced || !cr.geodesic)
        throw std::runtime_error("chart: sharp-direction geodesic is not purely balanced");
    MoebiusAut m = cr.geodesic->m;
    auto eta = fixed_points(m, tol);
    if (arg_2pi(eta[0]) > arg_2pi(eta[1])) std::swap(eta[0], eta[1]);
    const BoundaryGeodesic arc = boundary_geodesic(eta[0], eta[1], tol);
    const MoebiusAut psi = arc.map;
    // psi conjugates b_r onto m; fixing +-1 forces the conjugate irrotational
    const MoebiusAut mc = compose(compose(inverse(psi), m), psi);
    if (std::abs(std::imag(mc.alpha)) > 1e-6 || std::abs(mc.tau - 1.0) > 1e-6)
        throw std::runtime_error("chart: conjugated automorphism is not irrotational");
    double r = std::real(mc.alpha);
    if (r < 0.0) {
        m = inverse(m);
        r = -r;
    }
    const GPoint gc = apply_aut(inverse(psi), g);
    const auto [l1, l2] = lift(gc);
    const MoebiusAut br = MoebiusAut::blaschke(Complex{r, 0.0});
    const Complex x = std::abs(br(l1) - l2) <= std::abs(br(l2) - l1) ? l1 : l2;
    if (std::abs(std::imag(x)) > 1e-6)
        throw std::runtime_error("chart: curve parameter is not real");
    const double u = 0.5 * (std::real(x) + 1.0);
    return {eta[0], eta[1], r, u};
}

inline GPoint unchart(const ChartCoord& cc, const Tolerances& tol = {}) {
    if (!(cc.t > 0.0 && cc.t < 1.0) || !(cc.u > 0.0 && cc.u < 1.0))
        throw std::domain_error("unchart: coordinates outside (0,1)");
    const BoundaryGeodesic arc = boundary_geodesic(cc.eta1, cc.eta2, tol);
    const Complex x{2.0 * cc.u - 1.0, 0.0};
    const MoebiusAut br = MoebiusAut::blaschke(Complex{cc.t, 0.0});
    return symmetrize(arc.map(x), arc.map(br(x)));
}

} // namespace symbidisc
