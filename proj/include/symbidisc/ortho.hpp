#pragma once

#include <cmath>
#include <stdexcept>

#include "symbidisc/extremal.hpp"

// Orthogonality of geodesics to flat geodesics, construction of the
// orthogonal leaf through any point, closest-point projection, and the
// critical-pair reflection criterion.  A geodesic D is orthogonal to F^beta
// when it meets F^beta at a point whose tangent along D is the sharp
// direction; this is equivalent to the closest-point property.

namespace symbidisc {

// A leaf of the foliation of G by geodesics orthogonal to F^beta.
struct OrthoLeaf {
    Complex beta{0.0, 0.0};   // base flat geodesic
    Geodesic geodesic;        // irrotational B_m after conjugation to F^0
    GPoint foot;              // intersection with F^beta
};

namespace detail {

// beta' with z1 - z2 = beta' - conj(beta') z1 z2, as a 2x2 real system in
// (Re beta', Im beta'); the determinant is 1 - |z1 z2|^2 > 0.
inline Complex leaf_beta(Complex z1, Complex z2) {
    const Complex d = z1 - z2;
    const Complex q = z1 * z2;
    const double m11 = 1.0 - std::real(q), m12 = -std::imag(q), m22 = 1.0 + std::real(q);
    const double det = m11 * m22 - m12 * m12;
    const double x = (m22 * std::real(d) - m12 * std::imag(d)) / det;
    const double y = (-m12 * std::real(d) + m11 * std::imag(d)) / det;
    return {x, y};
}

} // namespace detail

// The unique geodesic through mu orthogonal to F^beta, with its foot on
// F^beta.  Everything reduces to F^0 by conjugation: there the leaf through
// a lifted point (z1, z2) is B_{b_beta'} with z2 = b_beta'(z1), and its foot
// is (0, -alpha^2) for alpha the irrotational square root of b_beta'.
inline OrthoLeaf orthogonal_geodesic(Complex beta, const GPoint& mu,
                                     const Tolerances& tol = {}) {
    if (!contains(mu, tol))
        throw std::domain_error("orthogonal_geodesic: point outside G");
    const MoebiusAut g = to_F0(beta);
    const MoebiusAut gi = inverse(g);
    const GPoint mu0 = apply_aut(g, mu);
    Geodesic leaf0;
    GPoint foot0;
    if (is_royal(mu0, tol)) {
        leaf0 = make_bm(MoebiusAut::identity(), tol);
        foot0 = GPoint{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    } else if (std::abs(mu0.s) <= tol.on_geodesic_tol) {
        // already on F^0: the leaf is the sharp-direction geodesic there
        const auto cr = through_direction(mu0, sharp_direction(mu0), tol);
        leaf0 = *cr.geodesic;
        foot0 = mu0;
    } else {
        const auto [z1, z2] = lift(mu0);
        const MoebiusAut bb = MoebiusAut::blaschke(detail::leaf_beta(z1, z2));
        leaf0 = make_bm(bb, tol);
        const Complex alpha = irrotational_sqrt(bb, tol);
        foot0 = GPoint{Complex{0.0, 0.0}, -alpha * alpha};
    }
    return {beta, conjugate_geodesic(leaf0, gi, tol), apply_aut(gi, foot0)};
}

// Whether D meets F^beta with a sharp tangent at the intersection.  The
// intersection condition z + m(z) = beta + conj(beta) z m(z) clears to a
// quadratic in the parameter; interior roots are checked for sharpness.
inline bool is_orthogonal(const Geodesic& D, Complex beta, const Tolerances& tol = {}) {
    if (D.kind == Geodesic::Kind::Flat) return false;  // a flat tangent is never sharp
    if (D.type == GeodesicType::Royal) return true;    // royal meets every flat sharply
    const Complex al = D.m.alpha;
    const Complex ta = D.m.tau;
    const Complex cb = std::conj(beta);
    const Complex A = std::conj(al) + cb * ta;
    const Complex B = -(1.0 + ta + beta * std::conj(al) + cb * ta * al);
    const Complex C = beta + ta * al;
    for (const Complex z : detail::solve_quadratic(A, B, C)) {
        if (std::abs(z) >= 1.0 - tol.boundary_margin) continue;
        const GPoint lam = h_eval(D.m, z);
        if (projective_gap(h_tangent(D.m, z), sharp_direction(lam)) <= tol.sharp_tol)
            return true;
    }
    return false;
}

// The unique closest point in F^beta to mu: the foot of the orthogonal leaf.
inline GPoint closest_point(Complex beta, const GPoint& mu, const Tolerances& tol = {}) {
    if (std::abs(mu.s - (beta + std::conj(beta) * mu.p)) <= tol.on_geodesic_tol)
        return mu;  // already on F^beta
    return orthogonal_geodesic(beta, mu, tol).foot;
}

// The reflection criterion for a critical pair ((0, p0), mu) on B_m with m
// hyperbolic: with eta_1, eta_2 the fixed points of m and
// w_i = eta_i Phi_{conj(eta_i)}(mu), the pair is critical exactly when w_2
// is the hyperbolic reflection of w_1 about p0 -- which in turn happens
// exactly when m is irrotational.
inline bool critical_pair_check(Complex p0, const GPoint& mu, const MoebiusAut& m,
                                const Tolerances& tol = {}) {
    if (classify(m, tol) != AutClass::Hyperbolic)
        throw std::invalid_argument("critical_pair_check: automorphism must be hyperbolic");
    const auto on_bm = [&](const GPoint& g) {
        const auto [x, y] = lift(g);
        return std::min(std::abs(m(x) - y), std::abs(m(y) - x)) <= 1e-8;
    };
    const GPoint lam{Complex{0.0, 0.0}, p0};
    if (!on_bm(lam) || !on_bm(mu))
        throw std::invalid_argument("critical_pair_check: points not on B_m");
    const auto eta = fixed_points(m, tol);
    const Complex w1 = eta[0] * phi(std::conj(eta[0]), mu);
    const Complex w2 = eta[1] * phi(std::conj(eta[1]), mu);
    return std::abs(reflect(p0, w1) - w2) <= tol.sharp_tol;
}

} // namespace symbidisc
