#pragma once

#include <random>

#include "symbidisc/symbidisc.hpp"

// Shared generators and oracles for the test suites.  All randomness is
// seeded so failures reproduce.

namespace testsupport {

using namespace symbidisc;

using Rng = std::mt19937_64;

inline Complex rand_disc(Rng& rng, double rmax = 0.8) {
    std::uniform_real_distribution<double> u(-rmax, rmax);
    for (;;) {
        const Complex z{u(rng), u(rng)};
        if (std::abs(z) < rmax) return z;
    }
}

inline Complex rand_unit(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    return std::polar(1.0, u(rng));
}

inline GPoint rand_gpoint(Rng& rng, double rmax = 0.8) {
    return symmetrize(rand_disc(rng, rmax), rand_disc(rng, rmax));
}

// A point safely away from the royal variety.
inline GPoint rand_gpoint_offroyal(Rng& rng, double rmax = 0.8, double min_gap = 0.08) {
    for (;;) {
        const Complex z1 = rand_disc(rng, rmax);
        const Complex z2 = rand_disc(rng, rmax);
        if (std::abs(z1 - z2) >= min_gap) return symmetrize(z1, z2);
    }
}

// Hyperbolic automorphism with classification margin: |tau - 1| < 2|alpha|
// by a comfortable factor.
inline MoebiusAut rand_hyperbolic(Rng& rng) {
    std::uniform_real_distribution<double> amp(0.15, 0.7);
    std::uniform_real_distribution<double> frac(-0.8, 0.8);
    const Complex alpha = std::polar(amp(rng), std::arg(rand_unit(rng)));
    // |e^{i t} - 1| = 2 sin(|t|/2) < 2 |alpha|  <=>  |t| < 2 asin |alpha|
    const double tmax = 2.0 * std::asin(std::abs(alpha));
    return {alpha, std::polar(1.0, frac(rng) * tmax)};
}

inline MoebiusAut rand_irrotational(Rng& rng, double rmax = 0.7) {
    for (;;) {
        const Complex a = rand_disc(rng, rmax);
        if (std::abs(a) > 0.1) return MoebiusAut::blaschke(a);
    }
}

inline MoebiusAut rand_nonelliptic(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    switch (pick(rng)) {
        case 0: return rand_irrotational(rng);
        case 1: {  // parabolic: |tau - 1| = 2|alpha| exactly
            const Complex alpha = std::polar(0.4, std::arg(rand_unit(rng)));
            const double theta = 2.0 * std::asin(std::abs(alpha));
            return {alpha, std::polar(1.0, theta)};
        }
        default: return rand_hyperbolic(rng);
    }
}

inline MoebiusAut rand_aut(Rng& rng) {
    return {rand_disc(rng, 0.7), rand_unit(rng)};
}

inline double gdist(const GPoint& a, const GPoint& b) { return gpoint_distance(a, b); }

} // namespace testsupport
