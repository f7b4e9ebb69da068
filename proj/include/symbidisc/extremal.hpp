#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "symbidisc/geodesic.hpp"

// The Caratheodory extremal engine: the universal family Phi_omega, its
// gradient, circle-constrained maximization producing the hyperbolic
// distance d_G and the set of extremal omega, and on-geodesic Kobayashi
// values (equal to the Caratheodory values, G being a Lempert domain).

namespace symbidisc {

// Phi_omega(s, p) = (2 omega p - s) / (2 - omega s), a holomorphic map from
// G to the disc for every unimodular omega.
inline Complex phi(Complex omega, const GPoint& g) {
    return (2.0 * omega * g.p - g.s) / (2.0 - omega * g.s);
}

// (d/ds, d/dp) of Phi_omega.
inline std::pair<Complex, Complex> phi_gradient(Complex omega, const GPoint& g) {
    const Complex den = 2.0 - omega * g.s;
    return {(-2.0 + 2.0 * omega * omega * g.p) / (den * den), 2.0 * omega / den};
}

struct ExtremalResult {
    double value = 0.0;
    std::vector<Complex> maximizers;   // unimodular, sorted by argument
    bool constant_objective = false;
    bool degenerate = false;
};

namespace detail {

inline double extremal_objective(Complex omega, const Datum& d, const Tolerances& tol) {
    if (!d.infinitesimal)
        return poincare(phi(omega, d.base), phi(omega, d.second), tol);
    const Complex f = phi(omega, d.base);
    const auto [gs, gp] = phi_gradient(omega, d.base);
    return std::abs(gs * d.v1 + gp * d.v2) / (1.0 - std::norm(f));
}

} // namespace detail

// Maximizes the datum objective omega -> |Phi_omega(delta)| over the unit
// circle: a uniform grid of 720 angles brackets every local maximum, each
// bracket is refined by golden section to angular width 1e-12, and the
// refined maxima are clustered.  A spread below value_tol reports a constant
// objective (flat and royal data legitimately produce omega-independent
// objectives) with the mean value and no maximizers.
inline ExtremalResult caratheodory(const Datum& d, const Tolerances& tol = {}) {
    if (!contains(d.base, tol) || (!d.infinitesimal && !contains(d.second, tol)))
        throw std::domain_error("caratheodory: datum base points must lie in G");
    if (d.degenerate()) {
        ExtremalResult r;
        r.degenerate = true;
        return r;
    }
    const auto obj = [&](double theta) {
        return detail::extremal_objective(std::polar(1.0, theta), d, tol);
    };
    constexpr int kGrid = 720;
    constexpr double kStep = 2.0 * kPi / kGrid;
    std::vector<double> f(kGrid);
    double fmax = -1.0, fmin = 1e300, fsum = 0.0;
    for (int k = 0; k < kGrid; ++k) {
        f[k] = obj(k * kStep);
        fmax = std::max(fmax, f[k]);
        fmin = std::min(fmin, f[k]);
        fsum += f[k];
    }
    if (fmax - fmin < tol.value_tol) {
        ExtremalResult r;
        r.value = fsum / kGrid;
        r.constant_objective = true;
        return r;
    }
    const auto refine = [&](double lo, double hi) {
        constexpr double gr = 0.6180339887498949;
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = obj(x1), f2 = obj(x2);
        while (b - a > 1e-12) {
            if (f1 < f2) {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = obj(x2);
            } else {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = obj(x1);
            }
        }
        const double mid = 0.5 * (a + b);
        return std::pair{mid, obj(mid)};
    };
    struct Peak { double theta, value; };
    std::vector<Peak> peaks;
    double best = -1.0;
    for (int k = 0; k < kGrid; ++k) {
        const double prev = f[(k + kGrid - 1) % kGrid];
        const double next = f[(k + 1) % kGrid];
        if (f[k] < prev || f[k] < next) continue;
        if (f[k] == prev && f[k] == next) continue;  // interior of a plateau
        const auto [theta, value] = refine((k - 1) * kStep, (k + 1) * kStep);
        peaks.push_back({std::fmod(theta + 2.0 * kPi, 2.0 * kPi), value});
        best = std::max(best, value);
    }
    std::erase_if(peaks, [&](const Peak& p) { return p.value < best - tol.value_tol; });
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.theta < b.theta; });
    // circular clustering: merge peaks within cluster_angle, keeping the best
    std::vector<Peak> merged;
    for (const Peak& p : peaks) {
        if (!merged.empty() && p.theta - merged.back().theta <= tol.cluster_angle) {
            if (p.value > merged.back().value) merged.back() = p;
        } else {
            merged.push_back(p);
        }
    }
    if (merged.size() > 1 &&
        merged.front().theta + 2.0 * kPi - merged.back().theta <= tol.cluster_angle) {
        if (merged.back().value > merged.front().value) merged.front() = merged.back();
        merged.pop_back();
    }
    ExtremalResult r;
    r.value = best;
    for (const Peak& p : merged) r.maximizers.push_back(std::polar(1.0, p.theta));
    return r;
}

inline ExtremalResult caratheodory(const GPoint& a, const GPoint& b,
                                   const Tolerances& tol = {}) {
    return caratheodory(Datum::discrete(a, b), tol);
}

// Hyperbolic distance of a datum in G (Caratheodory = Kobayashi on G).
inline double hyperbolic_distance(const GPoint& a, const GPoint& b,
                                  const Tolerances& tol = {}) {
    return caratheodory(Datum::discrete(a, b), tol).value;
}

// Kobayashi value along a parametrized geodesic: the Poincare distance of
// the parameters.  Agrees with the Caratheodory value of the image datum.
inline double geodesic_distance(const Geodesic& geo, Complex z, Complex w,
                                const Tolerances& tol = {}) {
    (void)geo;
    return poincare(z, w, tol);
}

} // namespace symbidisc
