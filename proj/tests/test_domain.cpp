#include <catch2/catch_amalgamated.hpp>
#include <array>

#include "support.hpp"

using namespace symbidisc;
using testsupport::Rng;
using Catch::Approx;

namespace {
double cdist(Complex a, Complex b) { return std::abs(a - b); }

// Tangent of the orbit path t -> gamma_{b_{t a}}(g) at t = 0, by central
// differences.  For every nonzero a this lies in the sharp complex line.
std::pair<Complex, Complex> orbit_tangent(const GPoint& g, Complex a) {
    const double h = 1e-6;
    const GPoint fp = apply_aut(MoebiusAut::blaschke(h * a), g);
    const GPoint fm = apply_aut(MoebiusAut::blaschke(-h * a), g);
    return {(fp.s - fm.s) / (2.0 * h), (fp.p - fm.p) / (2.0 * h)};
}
}

TEST_CASE("symmetrize and lift") {
    const GPoint g = symmetrize({0.0, 0.9}, {0.0, -0.9});
    CHECK(cdist(g.s, {0.0, 0.0}) < 1e-15);
    CHECK(cdist(g.p, {0.81, 0.0}) < 1e-15);

    const auto [z1, z2] = lift(GPoint{{0.0, 0.0}, {-0.25, 0.0}});
    CHECK(cdist(z1, {0.5, 0.0}) < 1e-15);
    CHECK(cdist(z2, {-0.5, 0.0}) < 1e-15);

    const auto [r1, r2] = lift(royal_point({0.3, 0.0}));
    CHECK(cdist(r1, {0.3, 0.0}) < 1e-12);
    CHECK(cdist(r2, {0.3, 0.0}) < 1e-12);

    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const GPoint h = testsupport::rand_gpoint(rng, 0.9);
        const auto [a, b] = lift(h);
        CHECK(testsupport::gdist(symmetrize(a, b), h) < 1e-12);
    }
}

TEST_CASE("membership") {
    CHECK(contains(Complex{0.65, 0.0}, Complex{0.3, 0.0}));
    CHECK_FALSE(contains(Complex{2.0, 0.0}, Complex{1.0, 0.0}));
    CHECK(contains(Complex{0.36, 0.32}, Complex{0.2, 0.0}));  // a point of F^{0.3+0.4i}

    Rng rng(22);
    std::uniform_real_distribution<double> box(-1.4, 1.4);
    int hits = 0;
    for (int i = 0; i < 1000; ++i) {
        const Complex s{box(rng), box(rng)};
        const Complex p{box(rng), box(rng)};
        const GPoint g{s, p};
        const bool via_flat =
            std::abs(p) < 1.0 && std::abs(flat_coordinate(g)) < 1.0 - 1e-12;
        // skip the membership boundary band where fp noise decides the side
        const double slack = std::abs(std::abs(s - std::conj(s) * p) - (1.0 - std::norm(p)));
        if (slack < 1e-9) continue;
        CHECK(contains(g) == via_flat);
        hits += contains(g);
    }
    CHECK(hits > 50);  // the box actually samples both sides
}

TEST_CASE("flat coordinate and directions") {
    CHECK(std::abs(flat_coordinate(GPoint{{0.0, 0.0}, {0.4, -0.3}})) < 1e-15);
    CHECK(cdist(flat_coordinate(GPoint{{0.36, 0.32}, {0.2, 0.0}}), {0.3, 0.4}) < 1e-14);
    CHECK(cdist(flat_coordinate(royal_point({0.5, 0.0})), {0.8, 0.0}) < 1e-14);

    const Direction f = flat_direction(GPoint{{0.36, 0.32}, {0.2, 0.0}});
    CHECK(projective_gap(f, Direction({0.3, -0.4}, {1.0, 0.0})) < 1e-14);
    CHECK(projective_gap(flat_direction(GPoint{{0.0, 0.0}, {0.3, 0.0}}),
                         Direction({0.0, 0.0}, {1.0, 0.0})) < 1e-14);

    SECTION("sharp direction special values") {
        CHECK(projective_gap(sharp_direction(GPoint{{0.0, 0.0}, {-0.25, 0.0}}),
                             Direction({1.0, 0.0}, {0.0, 0.0})) < 1e-14);
        // reproduces the royal tangent (1, z) on the royal variety
        const GPoint r = royal_point({0.3, 0.0});
        CHECK(projective_gap(sharp_direction(r), Direction({1.0, 0.0}, {0.3, 0.0})) < 1e-12);
        const GPoint q{{0.36, 0.32}, {0.2, 0.0}};
        const Direction sq = sharp_direction(q);
        CHECK(cdist(sq.v2 / sq.v1, {0.14335260115606936, 0.26820809248554913}) < 1e-12);
    }

    SECTION("orbit tangents stay sharp on F0") {
        // on F^0 every generator path t -> gamma_{b_{t a}}(0, p) has tangent
        // (-2(a + conj(a) p), 0), a sharp vector
        Rng rng(23);
        for (int i = 0; i < 20; ++i) {
            const GPoint g{{0.0, 0.0}, testsupport::rand_disc(rng, 0.8)};
            const Direction sh = sharp_direction(g);
            for (const Complex a : {Complex{1.0, 0.0}, Complex{0.0, 1.0}, Complex{0.3, -0.5}}) {
                const auto [ts, tp] = orbit_tangent(g, a);
                CHECK(projective_gap(Direction(ts, tp), sh) < 1e-6);
            }
        }
    }

    SECTION("sharp is the complex line inside the real orbit tangent space") {
        // the real span of the generator tangents is 3-dimensional; the sharp
        // line is the unique complex line it contains, so both v and iv must
        // lie in that span while the flat direction must not
        Rng rng(33);
        const auto as_r4 = [](std::pair<Complex, Complex> v) {
            return std::array<double, 4>{std::real(v.first), std::imag(v.first),
                                         std::real(v.second), std::imag(v.second)};
        };
        const auto residual = [&](const std::vector<std::array<double, 4>>& basis,
                                  std::array<double, 4> v) {
            // Gram-Schmidt projection residual, normalized
            auto dot = [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
                return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
            };
            std::vector<std::array<double, 4>> q;
            for (auto w : basis) {
                for (const auto& e : q) {
                    const double c = dot(w, e);
                    for (int k = 0; k < 4; ++k) w[k] -= c * e[k];
                }
                const double n = std::sqrt(dot(w, w));
                if (n > 1e-12) {
                    for (double& x : w) x /= n;
                    q.push_back(w);
                }
            }
            const double n0 = std::sqrt(dot(v, v));
            for (const auto& e : q) {
                const double c = dot(v, e);
                for (int k = 0; k < 4; ++k) v[k] -= c * e[k];
            }
            return std::sqrt(dot(v, v)) / n0;
        };
        const double h = 1e-6;
        for (int i = 0; i < 20; ++i) {
            const GPoint g = testsupport::rand_gpoint_offroyal(rng, 0.7);
            std::vector<std::array<double, 4>> span;
            span.push_back(as_r4(orbit_tangent(g, {1.0, 0.0})));
            span.push_back(as_r4(orbit_tangent(g, {0.0, 1.0})));
            {   // rotation generator
                const GPoint fp = apply_aut(MoebiusAut::rotation(std::polar(1.0, h)), g);
                const GPoint fm = apply_aut(MoebiusAut::rotation(std::polar(1.0, -h)), g);
                span.push_back(as_r4({(fp.s - fm.s) / (2.0 * h), (fp.p - fm.p) / (2.0 * h)}));
            }
            const Direction sh = sharp_direction(g);
            const Complex i1{0.0, 1.0};
            CHECK(residual(span, as_r4({sh.v1, sh.v2})) < 1e-5);
            CHECK(residual(span, as_r4({i1 * sh.v1, i1 * sh.v2})) < 1e-5);
            const Direction fl = flat_direction(g);
            const double off = std::min(residual(span, as_r4({fl.v1, fl.v2})),
                                        residual(span, as_r4({i1 * fl.v1, i1 * fl.v2})));
            CHECK(off > 1e-3);
        }
    }

    SECTION("sharp never equals flat") {
        Rng rng(24);
        for (int i = 0; i < 100; ++i) {
            const GPoint g = testsupport::rand_gpoint(rng, 0.9);
            CHECK(projective_gap(sharp_direction(g), flat_direction(g)) > 1e-4);
        }
    }
}

TEST_CASE("automorphism action") {
    // gamma_{b_{0.5}} carries (0.8, 0) in F^{0.8} to (0, -0.25) in F^0
    const GPoint img = apply_aut(MoebiusAut::blaschke({0.5, 0.0}), GPoint{{0.8, 0.0}, {0.0, 0.0}});
    CHECK(testsupport::gdist(img, GPoint{{0.0, 0.0}, {-0.25, 0.0}}) < 1e-14);

    Rng rng(25);
    SECTION("group action") {
        for (int i = 0; i < 50; ++i) {
            const MoebiusAut b1 = testsupport::rand_aut(rng);
            const MoebiusAut b2 = testsupport::rand_aut(rng);
            const GPoint g = testsupport::rand_gpoint(rng);
            CHECK(testsupport::gdist(apply_aut(b1, apply_aut(b2, g)),
                                     apply_aut(compose(b1, b2), g)) < 1e-10);
        }
    }
    SECTION("royal invariance") {
        for (int i = 0; i < 50; ++i) {
            const MoebiusAut b = testsupport::rand_aut(rng);
            const Complex z = testsupport::rand_disc(rng);
            CHECK(testsupport::gdist(apply_aut(b, royal_point(z)), royal_point(b(z))) < 1e-12);
        }
    }
}

TEST_CASE("jacobian of the action") {
    const Jacobian2 id = aut_jacobian(MoebiusAut::identity(), GPoint{{0.3, 0.1}, {0.05, 0.0}});
    CHECK(cdist(id.ss, {1.0, 0.0}) + cdist(id.sp, {0.0, 0.0}) + cdist(id.ps, {0.0, 0.0}) +
              cdist(id.pp, {1.0, 0.0}) <
          1e-12);

    Rng rng(26);
    SECTION("agrees with central differences") {
        const double h = 1e-6;
        for (int i = 0; i < 50; ++i) {
            const MoebiusAut b = testsupport::rand_aut(rng);
            const GPoint g = testsupport::rand_gpoint_offroyal(rng, 0.7);
            const Jacobian2 J = aut_jacobian(b, g);
            const auto fd = [&](Complex ds, Complex dp) {
                const GPoint gp = apply_aut(b, GPoint{g.s + ds, g.p + dp});
                const GPoint gm = apply_aut(b, GPoint{g.s - ds, g.p - dp});
                return std::pair{(gp.s - gm.s) / (2.0 * h), (gp.p - gm.p) / (2.0 * h)};
            };
            const auto [ss, ps] = fd({h, 0.0}, {0.0, 0.0});
            const auto [sp, pp] = fd({0.0, 0.0}, {h, 0.0});
            CHECK(cdist(J.ss, ss) < 1e-6);
            CHECK(cdist(J.ps, ps) < 1e-6);
            CHECK(cdist(J.sp, sp) < 1e-6);
            CHECK(cdist(J.pp, pp) < 1e-6);
        }
    }
    SECTION("near-royal fallback stays finite and correct") {
        const GPoint g = symmetrize({0.3, 0.2}, {0.3 + 1e-10, 0.2});
        const MoebiusAut b = MoebiusAut::blaschke({0.4, -0.1});
        const Jacobian2 J = aut_jacobian(b, g);
        // the royal tangent (1, z) must push to the royal tangent at b(z)
        const Complex z = royal_parameter(g);
        const auto [ts, tp] = J.apply(Complex{1.0, 0.0}, z);
        CHECK(projective_gap(Direction(ts, tp), Direction({1.0, 0.0}, b(z))) < 1e-5);
    }
    SECTION("direction covariance") {
        for (int i = 0; i < 50; ++i) {
            const MoebiusAut b = testsupport::rand_aut(rng);
            const GPoint g = testsupport::rand_gpoint(rng, 0.7);
            const GPoint img = apply_aut(b, g);
            const Jacobian2 J = aut_jacobian(b, g);
            CHECK(projective_gap(J.apply(flat_direction(g)), flat_direction(img)) < 1e-7);
            CHECK(projective_gap(J.apply(sharp_direction(g)), sharp_direction(img)) < 1e-7);
        }
    }
}

TEST_CASE("reduction to F0") {
    CHECK(aut_distance(to_F0({0.0, 0.0}), MoebiusAut::identity()) < 1e-15);
    CHECK(aut_distance(to_F0({0.8, 0.0}), MoebiusAut::blaschke({0.5, 0.0})) < 1e-15);
    CHECK(aut_distance(to_F0({0.5, 0.0}), MoebiusAut::blaschke({2.0 - std::sqrt(3.0), 0.0})) <
          1e-12);

    const MoebiusAut b = to_F0({0.5, 0.0});
    for (const double z : {-0.4, 0.1, 0.6}) {
        const GPoint g = flat_point({0.5, 0.0}, {z, 0.3 * z});
        CHECK(std::abs(flat_coordinate(apply_aut(b, g))) < 1e-12);
    }

    Rng rng(27);
    for (int i = 0; i < 30; ++i) {
        const Complex beta = testsupport::rand_disc(rng, 0.95);
        const GPoint g = flat_point(beta, testsupport::rand_disc(rng, 0.95));
        CHECK(std::abs(flat_coordinate(apply_aut(to_F0(beta), g))) < 1e-10);
    }
}

TEST_CASE("direction normalization") {
    CHECK_THROWS_AS(Direction({0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
    const Direction d({2.0, 0.0}, {1.0, 0.0});
    CHECK(cdist(d.v1, {1.0, 0.0}) < 1e-15);
    CHECK(cdist(d.v2, {0.5, 0.0}) < 1e-15);
    const Direction e({1.0, 0.0}, {-3.0, 0.0});
    CHECK(cdist(e.v2, {1.0, 0.0}) < 1e-15);
    // projective equality ignores scaling by any nonzero complex number
    const Direction f({0.3, 0.4}, {-1.0, 0.2});
    const Complex c{-2.0, 5.0};
    CHECK(projective_gap(f, Direction(c * Complex{0.3, 0.4}, c * Complex{-1.0, 0.2})) < 1e-15);
}
