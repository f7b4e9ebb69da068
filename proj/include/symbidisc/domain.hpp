#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "symbidisc/disc.hpp"

// Points, lifts, membership, the automorphism action gamma_b with its
// derivative, flat coordinates, and the flat and sharp direction fields on
// the symmetrized bidisc G = {(z1 + z2, z1 z2) : |z1| < 1, |z2| < 1}.

namespace symbidisc {

// A point (s, p) of G with s = z1 + z2, p = z1 z2.
struct GPoint {
    Complex s{0.0, 0.0};
    Complex p{0.0, 0.0};
};

inline GPoint symmetrize(Complex z1, Complex z2) { return {z1 + z2, z1 * z2}; }

inline double gpoint_distance(const GPoint& a, const GPoint& b) {
    return std::abs(a.s - b.s) + std::abs(a.p - b.p);
}

// Membership criterion |s - conj(s) p| < 1 - |p|^2, with boundary slack.
inline bool contains(Complex s, Complex p, const Tolerances& tol = {}) {
    return std::abs(s - std::conj(s) * p) < 1.0 - std::norm(p) - tol.boundary_margin;
}

inline bool contains(const GPoint& g, const Tolerances& tol = {}) {
    return contains(g.s, g.p, tol);
}

// Unordered disc pair with z1 + z2 = s and z1 z2 = p, via a
// cancellation-stable quadratic.  The lexicographically larger (Re, Im)
// component comes first; the ordering is a convention only and consumers
// must treat the pair as unordered.
inline std::pair<Complex, Complex> lift(const GPoint& g) {
    Complex sq = std::sqrt(g.s * g.s - 4.0 * g.p);
    if (std::real(std::conj(g.s) * sq) < 0.0) sq = -sq;
    Complex z1 = 0.5 * (g.s + sq);
    Complex z2 = std::abs(z1) > 1e-300 ? g.p / z1 : 0.5 * (g.s - sq);
    const auto key = [](Complex z) { return std::pair{std::real(z), std::imag(z)}; };
    if (key(z1) < key(z2)) std::swap(z1, z2);
    return {z1, z2};
}

// The royal variety R = {(2z, z^2)} and its scaled proximity test.
inline GPoint royal_point(Complex z) { return {2.0 * z, z * z}; }

inline Complex royal_parameter(const GPoint& g) { return 0.5 * g.s; }

inline bool is_royal(const GPoint& g, const Tolerances& tol = {}) {
    return std::abs(g.s * g.s - 4.0 * g.p) <= tol.royal_margin * (1.0 + std::norm(g.s));
}

// The unique beta with g in F^beta = {(beta + conj(beta) z, z) : z in D}.
inline Complex flat_coordinate(const GPoint& g) {
    return (g.s - std::conj(g.s) * g.p) / (1.0 - std::norm(g.p));
}

inline GPoint flat_point(Complex beta, Complex z) {
    return {beta + std::conj(beta) * z, z};
}

// A direction in the complex projective line: a nonzero pair normalized so
// the larger-modulus component equals 1, ties broken toward v1.
struct Direction {
    Complex v1{1.0, 0.0};
    Complex v2{0.0, 0.0};

    Direction(Complex a, Complex b) {
        if (std::abs(a) == 0.0 && std::abs(b) == 0.0)
            throw std::invalid_argument("Direction: zero vector");
        if (std::abs(a) >= std::abs(b)) {
            v1 = Complex{1.0, 0.0};
            v2 = b / a;
        } else {
            v1 = a / b;
            v2 = Complex{1.0, 0.0};
        }
    }
};

// Sine-of-angle metric between projective lines.
inline double projective_gap(const Direction& a, const Direction& b) {
    const double na = std::sqrt(std::norm(a.v1) + std::norm(a.v2));
    const double nb = std::sqrt(std::norm(b.v1) + std::norm(b.v2));
    return std::abs(a.v1 * b.v2 - a.v2 * b.v1) / (na * nb);
}

inline bool parallel(const Direction& a, const Direction& b, const Tolerances& tol = {}) {
    return projective_gap(a, b) <= tol.dir_eps;
}

inline Direction flat_direction(const GPoint& g) {
    return Direction(std::conj(flat_coordinate(g)), Complex{1.0, 0.0});
}

// Sharp direction (1, (beta - s/2)/(1 - conj(beta) s/2)) with
// beta = flat_coordinate(g); reduces to (1, 0) on F^0 and to the royal
// tangent (1, z) at royal points.
inline Direction sharp_direction(const GPoint& g) {
    const Complex beta = flat_coordinate(g);
    return Direction(Complex{1.0, 0.0},
                     (beta - 0.5 * g.s) / (1.0 - 0.5 * std::conj(beta) * g.s));
}

// gamma_b(pi(z1, z2)) = pi(b(z1), b(z2))
inline GPoint apply_aut(const MoebiusAut& b, const GPoint& g) {
    const auto [z1, z2] = lift(g);
    return symmetrize(b(z1), b(z2));
}

// Derivative of gamma_b in (s, p) coordinates: d(s', p') = J (ds, dp).
struct Jacobian2 {
    Complex ss{1.0, 0.0}, sp{0.0, 0.0};
    Complex ps{0.0, 0.0}, pp{1.0, 0.0};

    std::pair<Complex, Complex> apply(Complex ds, Complex dp) const {
        return {ss * ds + sp * dp, ps * ds + pp * dp};
    }
    Direction apply(const Direction& v) const {
        const auto [a, b] = apply(v.v1, v.v2);
        return Direction(a, b);
    }
};

// Off the royal variety the lift splits the derivative:
//   dz_i = (z_i ds - dp)/(z_i - z_j),
//   ds' = b'(z1) dz1 + b'(z2) dz2,  dp' = b(z2) b'(z1) dz1 + b(z1) b'(z2) dz2.
// Near the royal variety the lift is singular and central finite differences
// (step 1e-6, falling back to one-sided when a probe leaves G) take over.
inline Jacobian2 aut_jacobian(const MoebiusAut& b, const GPoint& g,
                              const Tolerances& tol = {}) {
    const auto [z1, z2] = lift(g);
    if (std::abs(z1 - z2) >= 1e-8) {
        const Complex d1 = b.derivative(z1), d2 = b.derivative(z2);
        const Complex b1 = b(z1), b2 = b(z2);
        const Complex det = z1 - z2;
        Jacobian2 j;
        j.ss = (d1 * z1 - d2 * z2) / det;
        j.sp = (d2 - d1) / det;
        j.ps = (b2 * d1 * z1 - b1 * d2 * z2) / det;
        j.pp = (b1 * d2 - b2 * d1) / det;
        return j;
    }
    const double h = 1e-6;
    const auto column = [&](bool in_s) {
        const Complex ds = in_s ? Complex{h, 0.0} : Complex{0.0, 0.0};
        const Complex dp = in_s ? Complex{0.0, 0.0} : Complex{h, 0.0};
        const GPoint gp{g.s + ds, g.p + dp};
        const GPoint gm{g.s - ds, g.p - dp};
        const bool okp = contains(gp, tol), okm = contains(gm, tol);
        if (okp && okm) {
            const GPoint ip = apply_aut(b, gp), im = apply_aut(b, gm);
            return std::pair{(ip.s - im.s) / (2.0 * h), (ip.p - im.p) / (2.0 * h)};
        }
        const GPoint i0 = apply_aut(b, g);
        if (okp) {
            const GPoint ip = apply_aut(b, gp);
            return std::pair{(ip.s - i0.s) / h, (ip.p - i0.p) / h};
        }
        const GPoint im = apply_aut(b, gm);
        return std::pair{(i0.s - im.s) / h, (i0.p - im.p) / h};
    };
    Jacobian2 j;
    const auto [ss, ps] = column(true);
    const auto [sp, pp] = column(false);
    j.ss = ss;
    j.ps = ps;
    j.sp = sp;
    j.pp = pp;
    return j;
}

// gamma_{b_alpha} with alpha the hyperbolic midpoint of 0 and beta maps
// F^beta onto F^0.
inline MoebiusAut to_F0(Complex beta) {
    return MoebiusAut::blaschke(beta / (1.0 + std::sqrt(1.0 - std::norm(beta))));
}

// A datum: an ordered pair of points (discrete) or a point with a tangent
// vector (infinitesimal), the argument of the metric engine.
struct Datum {
    bool infinitesimal = false;
    GPoint base{};
    GPoint second{};            // discrete only
    Complex v1{}, v2{};         // infinitesimal only

    static Datum discrete(const GPoint& a, const GPoint& b) {
        Datum d;
        d.base = a;
        d.second = b;
        return d;
    }
    static Datum tangent(const GPoint& at, Complex v1, Complex v2) {
        Datum d;
        d.infinitesimal = true;
        d.base = at;
        d.v1 = v1;
        d.v2 = v2;
        return d;
    }

    bool degenerate() const {
        if (infinitesimal) return std::abs(v1) == 0.0 && std::abs(v2) == 0.0;
        return gpoint_distance(base, second) == 0.0;
    }
};

} // namespace symbidisc
