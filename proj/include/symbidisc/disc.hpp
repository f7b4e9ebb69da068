#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symbidisc/tolerances.hpp"

// Poincare-disc arithmetic and the Moebius automorphism group of the unit
// disc: evaluation, composition, classification, fixed points, irrotational
// structure, hyperbolic reflection and real boundary-to-boundary geodesics.

namespace symbidisc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_interior_point(Complex z, const Tolerances& tol = {}) {
    return std::abs(z) < 1.0 - tol.boundary_margin;
}

inline bool is_circle_point(Complex z, const Tolerances& tol = {}) {
    return std::abs(std::abs(z) - 1.0) <= tol.boundary_margin;
}

inline Complex unit(Complex z) { return z / std::abs(z); }

// Argument mapped to [0, 2*pi).
inline double arg_2pi(Complex z) {
    const double a = std::arg(z);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

namespace detail {

// Roots of a z^2 + b z + c = 0.  The larger-magnitude root is computed
// first and the other recovered from the product of roots, so nearly
// coincident or nearly cancelling configurations stay stable.  A leading
// coefficient that vanishes against |b| + |c| degrades to the linear case.
inline std::vector<Complex> solve_quadratic(Complex a, Complex b, Complex c) {
    if (std::abs(a) <= 1e-14 * (std::abs(b) + std::abs(c))) {
        if (std::abs(b) == 0.0) return {};
        return {-c / b};
    }
    Complex sq = std::sqrt(b * b - 4.0 * a * c);
    if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
    const Complex q = -0.5 * (b + sq);
    if (std::abs(q) == 0.0) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    return {q / a, c / q};
}

} // namespace detail

// A disc automorphism in the canonical factorization
//     m = r_tau . b_alpha,   m(z) = tau (z - alpha) / (1 - conj(alpha) z),
// with |alpha| < 1 and |tau| = 1.  The factorization is unique, so equality
// of automorphisms is equality of the parameter pair; tau is renormalized to
// unit modulus after every arithmetic step.
struct MoebiusAut {
    Complex alpha{0.0, 0.0};
    Complex tau{1.0, 0.0};

    MoebiusAut() = default;
    MoebiusAut(Complex a, Complex t) : alpha(a), tau(t / std::abs(t)) {}

    static MoebiusAut identity() { return {}; }
    static MoebiusAut blaschke(Complex a) { return {a, Complex{1.0, 0.0}}; }
    static MoebiusAut rotation(Complex t) { return {Complex{0.0, 0.0}, t}; }

    Complex operator()(Complex z) const {
        const Complex den = 1.0 - std::conj(alpha) * z;
        if (std::abs(den) < 1e-15)
            throw std::domain_error("MoebiusAut: evaluation pole (requires |z| > 1)");
        return tau * (z - alpha) / den;
    }

    // m'(z)
    Complex derivative(Complex z) const {
        const Complex den = 1.0 - std::conj(alpha) * z;
        return tau * (1.0 - std::norm(alpha)) / (den * den);
    }
};

// (r_tau . b_alpha)^{-1} = r_conj(tau) . b_{-tau alpha}
inline MoebiusAut inverse(const MoebiusAut& m) {
    return {-m.tau * m.alpha, std::conj(m.tau)};
}

// first . second (apply `second`, then `first`), renormalized to canonical
// parameters: alpha = (first.second)^{-1}(0); tau from the image of 0, or of
// 1 when alpha vanishes.
inline MoebiusAut compose(const MoebiusAut& first, const MoebiusAut& second) {
    const Complex alpha = inverse(second)(first.alpha);
    const Complex at_zero = first(second(Complex{0.0, 0.0}));
    const Complex tau = std::abs(alpha) > 1e-12
                            ? -at_zero / alpha
                            : first(second(Complex{1.0, 0.0}));
    return {alpha, tau};
}

inline double aut_distance(const MoebiusAut& a, const MoebiusAut& b) {
    return std::abs(a.alpha - b.alpha) + std::abs(a.tau - b.tau);
}

enum class AutClass { Identity, Elliptic, Parabolic, Hyperbolic };

// Trichotomy on |tau - 1| vs 2|alpha|, with a band of width class_eps for
// the parabolic boundary case and the identity split off first.
inline AutClass classify(const MoebiusAut& m, const Tolerances& tol = {}) {
    if (std::abs(m.alpha) <= tol.class_eps && std::abs(m.tau - 1.0) <= tol.class_eps)
        return AutClass::Identity;
    const double d = std::abs(m.tau - 1.0) - 2.0 * std::abs(m.alpha);
    if (std::abs(d) <= tol.class_eps) return AutClass::Parabolic;
    return d > 0.0 ? AutClass::Elliptic : AutClass::Hyperbolic;
}

inline bool is_non_elliptic(const MoebiusAut& m, const Tolerances& tol = {}) {
    return classify(m, tol) != AutClass::Elliptic;
}

// Fixed points of m in the closed disc: the roots of
//     conj(alpha) x^2 + (tau - 1) x - tau alpha = 0.
// Hyperbolic: two circle points; parabolic: one circle point (double root);
// elliptic: the root inside the disc.
inline std::vector<Complex> fixed_points(const MoebiusAut& m, const Tolerances& tol = {}) {
    const AutClass cls = classify(m, tol);
    if (cls == AutClass::Identity)
        throw std::invalid_argument("fixed_points: all points fixed");
    if (std::abs(m.alpha) <= tol.class_eps) return {Complex{0.0, 0.0}};
    const Complex a = std::conj(m.alpha);
    const Complex b = m.tau - 1.0;
    const Complex c = -m.tau * m.alpha;
    if (cls == AutClass::Parabolic) return {unit(-b / (2.0 * a))};
    const auto roots = detail::solve_quadratic(a, b, c);
    if (cls == AutClass::Hyperbolic) return {unit(roots[0]), unit(roots[1])};
    return {std::abs(roots[0]) <= std::abs(roots[1]) ? roots[0] : roots[1]};
}

inline bool is_irrotational(const MoebiusAut& m, const Tolerances& tol = {}) {
    return std::abs(m.tau - 1.0) <= tol.class_eps;
}

// The unique alpha with b_alpha . b_alpha = m, m(alpha) = -alpha and
// m'(alpha) = 1; inverts beta = 2 alpha / (1 + |alpha|^2).
inline Complex irrotational_sqrt(const MoebiusAut& m, const Tolerances& tol = {}) {
    if (!is_irrotational(m, tol))
        throw std::invalid_argument("irrotational_sqrt: automorphism is not irrotational");
    const Complex beta = m.alpha;
    return beta / (1.0 + std::sqrt(1.0 - std::norm(beta)));
}

// Hyperbolic reflection of w about c: b_c^{-1}(-b_c(w)).  An involution
// whose only fixed point is c.
inline Complex reflect(Complex c, Complex w) {
    const MoebiusAut bc = MoebiusAut::blaschke(c);
    return inverse(bc)(-bc(w));
}

// Poincare distance between interior points.
inline double poincare(Complex z, Complex w, const Tolerances& tol = {}) {
    if (!is_interior_point(z, tol) || !is_interior_point(w, tol))
        throw std::domain_error("poincare: base points must be interior");
    return std::atanh(std::abs((z - w) / (1.0 - std::conj(w) * z)));
}

// Poincare length of a tangent vector v at an interior point z.
inline double poincare_infinitesimal(Complex z, Complex v, const Tolerances& tol = {}) {
    if (!is_interior_point(z, tol))
        throw std::domain_error("poincare: base point must be interior");
    return std::abs(v) / (1.0 - std::norm(z));
}

// The unique automorphism with m(z1) = z2 and m(w1) = w2, which exists
// exactly when rho(z1, w1) = rho(z2, w2).  Built as h^{-1} . g where g kills
// z1 and turns w1 onto the positive real axis and h does the same for
// (z2, w2).  The distance match uses a relative tolerance so distant pairs
// behave like nearby ones.
inline std::optional<MoebiusAut> connecting_aut(Complex z1, Complex z2,
                                                Complex w1, Complex w2,
                                                const Tolerances& tol = {}) {
    const double r1 = poincare(z1, w1, tol);
    const double r2 = poincare(z2, w2, tol);
    if (std::abs(r1 - r2) > tol.match_eps * (1.0 + r1)) return std::nullopt;
    const MoebiusAut b1 = MoebiusAut::blaschke(z1);
    const MoebiusAut b2 = MoebiusAut::blaschke(z2);
    if (r1 < 1e-13) return compose(inverse(b2), b1);  // both pairs degenerate
    const MoebiusAut g = compose(MoebiusAut::rotation(std::conj(unit(b1(w1)))), b1);
    const MoebiusAut h = compose(MoebiusAut::rotation(std::conj(unit(b2(w2)))), b2);
    return compose(inverse(h), g);
}

// Real hyperbolic geodesic in the disc with prescribed distinct boundary
// endpoints, realized as x -> map(x) on (-1, 1).  The endpoints are ordered
// by ascending argument in [0, 2 pi); map sends 1 to the first of them, -1
// to the second, and 0 to the point of the arc closest to the origin.
struct BoundaryGeodesic {
    MoebiusAut map;
    Complex eta_plus{1.0, 0.0};   // = limit of map at +1
    Complex eta_minus{-1.0, 0.0}; // = limit of map at -1
    double theta = 0.0;           // half-angle of the endpoint pair about zeta
    Complex zeta{1.0, 0.0};       // unit midpoint direction

    Complex operator()(double x) const { return map(Complex{x, 0.0}); }
};

inline BoundaryGeodesic boundary_geodesic(Complex eta1, Complex eta2,
                                          const Tolerances& tol = {}) {
    eta1 = unit(eta1);
    eta2 = unit(eta2);
    if (std::abs(eta1 - eta2) <= tol.boundary_margin)
        throw std::invalid_argument("boundary_geodesic: endpoints coincide");
    if (arg_2pi(eta1) > arg_2pi(eta2)) std::swap(eta1, eta2);
    // Write eta1 = zeta e^{i theta}, eta2 = zeta e^{-i theta}, theta in (0, pi).
    Complex zeta = std::sqrt(eta1 * eta2);
    double theta = std::arg(eta1 / zeta);
    if (theta <= 0.0) {
        zeta = -zeta;
        theta += kPi;
    }
    // For the symmetric pair e^{+-i theta} the arc crosses the real axis
    // orthogonally at a = (1 - sin theta)/cos theta = cos theta/(1 + sin theta).
    const double a = std::cos(theta) / (1.0 + std::sin(theta));
    const MoebiusAut ba = MoebiusAut::blaschke(Complex{a, 0.0});
    const Complex u = unit(ba(std::polar(1.0, theta)));
    const MoebiusAut phi = compose(MoebiusAut::rotation(std::conj(u)), ba);
    const MoebiusAut c = compose(MoebiusAut::rotation(zeta), inverse(phi));
    BoundaryGeodesic out{c, eta1, eta2, theta, zeta};
    if (!(std::abs(out(0.0)) < 1.0))
        throw std::runtime_error("boundary_geodesic: normalization failed");
    return out;
}

} // namespace symbidisc
