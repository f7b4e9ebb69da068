#pragma once

namespace symbidisc {

// Numeric policy knobs. Every tolerance-sensitive entry point accepts an
// optional Tolerances argument; a default-constructed instance carries the
// library defaults, so the library itself holds no mutable state.
struct Tolerances {
    double boundary_margin = 1e-12;  // interior vs circle membership slack
    double class_eps       = 1e-9;   // parabolic band around |tau-1| = 2|alpha|
    double dir_eps         = 1e-7;   // projective direction comparison
    double match_eps       = 1e-8;   // relative distance match in connecting_aut
    double circle_tol      = 1e-8;   // |tau|-on-circle test in direction typing
    double arc_tol         = 1e-8;   // angular tolerance at tau-arc endpoints
    double sharp_tol       = 1e-8;   // tangent-vs-sharp gap in orthogonality tests
    double cluster_angle   = 1e-6;   // maximizer clustering window (radians)
    double value_tol       = 1e-9;   // constant-objective / maximizer filtering
    double royal_margin    = 1e-10;  // scaled |s^2 - 4p| threshold for royal tests
    double royal_lift_gap  = 1e-8;   // lift gap below which a pair counts as royal
    double on_geodesic_tol = 1e-9;   // point-on-geodesic acceptance

    // One value for every knob (CLI --eps / SYMB_EPS override).
    static Tolerances uniform(double eps) {
        Tolerances t;
        t.boundary_margin = t.class_eps = t.dir_eps = t.match_eps = eps;
        t.circle_tol = t.arc_tol = t.sharp_tol = t.cluster_angle = eps;
        t.value_tol = t.royal_margin = t.royal_lift_gap = t.on_geodesic_tol = eps;
        return t;
    }
};

} // namespace symbidisc
