#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "polygame/encoders.hpp"
#include "polygame/parser.hpp"
#include "polygame/roots.hpp"
#include "polygame/verify.hpp"
#include "polygame/winding.hpp"

using namespace polygame;

namespace {

UnivariateEncoding worked_encoding() {
    return encode_univariate({rat(3, 16), rat(-1), rat(1)});
}

}  // namespace

TEST_CASE("point checks replay and judge exactly") {
    UnivariateEncoding enc = worked_encoding();
    VerificationReport good =
        check_points(enc.game, enc.witness, {{rat(1, 4)}, {rat(3, 4)}});
    CHECK(good.all_pass());
    CHECK(good.entries[0].residual_zero);

    VerificationReport bad = check_points(enc.game, enc.witness, {{rat(1, 2)}});
    CHECK_FALSE(bad.all_pass());
    CHECK(bad.entries[0].max_residual == doctest::Approx(1.0 / 16.0));

    VerificationReport empty =
        check_points(enc.game, enc.witness, std::vector<std::vector<Rational>>{});
    CHECK(empty.all_pass());
    CHECK(empty.entries.empty());

    SUBCASE("out-of-box points fail with a note instead of aborting") {
        VerificationReport outside = check_points(enc.game, enc.witness, {{rat(2)}});
        CHECK_FALSE(outside.all_pass());
        CHECK_FALSE(outside.entries[0].note.empty());
    }

    SUBCASE("float mode applies the tolerance") {
        VerificationReport f =
            check_points(enc.game, enc.witness, std::vector<std::vector<double>>{{0.25}}, 1e-9);
        CHECK(f.all_pass());
        CHECK(f.entries[0].max_residual <= 1e-12);
    }
}

TEST_CASE("root isolation in the open unit interval") {
    RootList two = roots_in_unit_interval({rat(3, 16), rat(-1), rat(1)});
    REQUIRE(two.count() == 2);
    CHECK(abs(two.roots[0].midpoint - rat(1, 4)) < rat(1, 1000000000000L));
    CHECK(abs(two.roots[1].midpoint - rat(3, 4)) < rat(1, 1000000000000L));
    CHECK(two.roots[0].isolating.hi < two.roots[1].isolating.lo);

    CHECK(roots_in_unit_interval({rat(1), rat(0), rat(1)}).count() == 0);
    CHECK(roots_in_unit_interval({rat(0), rat(1)}).count() == 0);  // root at 0 excluded
    CHECK_THROWS_AS(roots_in_unit_interval({rat(0)}), std::invalid_argument);

    SUBCASE("boundary roots are excluded on both sides") {
        // x(x-1)(x-1/2) has only 1/2 inside the open interval.
        // expanded: x^3 - 3/2 x^2 + 1/2 x
        RootList r = roots_in_unit_interval({rat(0), rat(1, 2), rat(-3, 2), rat(1)});
        REQUIRE(r.count() == 1);
        CHECK(abs(r.roots[0].midpoint - rat(1, 2)) < rat(1, 1000000000000L));
    }

    SUBCASE("repeated roots are reported once") {
        // (x - 1/3)^2 = x^2 - 2/3 x + 1/9
        RootList r = roots_in_unit_interval({rat(1, 9), rat(-2, 3), rat(1)});
        CHECK(r.count() == 1);
    }
}

TEST_CASE("root isolation agrees with seeded constructions") {
    testing::Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = static_cast<int>(rng.next(5));  // 0..4 roots
        std::set<Rational> seeds;
        while (static_cast<int>(seeds.size()) < k) seeds.insert(rng.unit_rational(40));
        Polynomial p = Polynomial::constant(1, rat(1));
        for (const Rational& r : seeds) {
            Polynomial factor = Polynomial::variable(1, 0) - Polynomial::constant(1, r);
            p = p * factor;
        }
        if (k == 0) {
            p = parse_poly_expr("x1^2 + 1", 1);
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree_in(0)) + 1, Rational(0));
        for (const auto& [mono, c] : p.terms)
            coeffs[static_cast<std::size_t>(mono.degree_of(0))] = c;
        RootList found = roots_in_unit_interval(coeffs);
        REQUIRE(found.count() == seeds.size());
        std::size_t idx = 0;
        for (const Rational& r : seeds) {
            CHECK(abs(found.roots[idx].midpoint - r) < rat(1, 1000000000000L));
            ++idx;
        }
    }
}

TEST_CASE("grid scans find equilibria only at the roots") {
    UnivariateEncoding enc = worked_encoding();
    std::vector<double> passing = grid_completeness(enc.game, enc.witness, 201, 1e-9);
    REQUIRE(passing.size() == 2);
    CHECK(passing[0] == doctest::Approx(0.25));
    CHECK(passing[1] == doctest::Approx(0.75));

    UnivariateEncoding rootless = encode_univariate({rat(1), rat(0), rat(1)});
    CHECK(grid_completeness(rootless.game, rootless.witness, 201, 1e-9).empty());

    SUBCASE("an unbounded tolerance passes every interior grid point") {
        std::vector<double> all = grid_completeness(enc.game, enc.witness, 201, 1e300);
        CHECK(all.size() == 199);  // endpoints are not totally mixed
    }

    SUBCASE("cluster counting groups nearby passes") {
        CHECK(count_clusters({}, 0.005, 2) == 0);
        CHECK(count_clusters({0.25, 0.75}, 0.005, 2) == 2);
        CHECK(count_clusters({0.25, 0.255, 0.26, 0.75}, 0.005, 2) == 2);
        CHECK(count_clusters({0.1, 0.2, 0.3}, 0.005, 2) == 3);
    }
}

TEST_CASE("winding numbers recover the local degree") {
    const Polynomial zx = parse_poly_expr("x1^2 - x2^2", 2);
    const Polynomial zy = parse_poly_expr("2*x1*x2", 2);
    CHECK(local_degree(zx, zy, 0.0, 0.0, 0.5) == 2);
    CHECK(local_degree(parse_poly_expr("x1", 2), parse_poly_expr("x2", 2), 0.0, 0.0, 0.5) == 1);
    const Polynomial cx = parse_poly_expr("x1^3 - 3*x1*x2^2", 2);
    const Polynomial cy = parse_poly_expr("3*x1^2*x2 - x2^3", 2);
    CHECK(local_degree(cx, cy, 0.0, 0.0, 0.5) == 3);

    SUBCASE("degrees add under complex multiplication") {
        const Polynomial ix = parse_poly_expr("x1", 2), iy = parse_poly_expr("x2", 2);
        // (zx, zy) * (ix, iy) as complex numbers gives z^3.
        Polynomial px = zx * ix - zy * iy;
        Polynomial py = zx * iy + zy * ix;
        CHECK(local_degree(px, py, 0.0, 0.0, 0.5) ==
              local_degree(zx, zy, 0.0, 0.0, 0.5) + local_degree(ix, iy, 0.0, 0.0, 0.5));
        Polynomial qx = zx * zx - zy * zy;
        Polynomial qy = zx * zy + zy * zx;
        CHECK(local_degree(qx, qy, 0.0, 0.0, 0.5) == 4);
    }

    SUBCASE("doubling the samples never changes the answer") {
        for (int samples : {64, 128, 256, 512}) {
            CHECK(local_degree(zx, zy, 0.0, 0.0, 0.5, samples) == 2);
            CHECK(local_degree(cx, cy, 0.0, 0.0, 0.5, samples) == 3);
        }
    }

    SUBCASE("a circle through the zero set is rejected") {
        // (x^2 - y^2, 2xy) vanishes only at the origin; center the circle
        // so it passes through it.
        CHECK_THROWS_AS(local_degree(zx, zy, 0.5, 0.0, 0.5), std::runtime_error);
        CHECK_THROWS_AS(local_degree(zx, zy, 0.0, 0.0, 0.5, 32), std::invalid_argument);
    }
}

TEST_CASE("report text lists one line per point") {
    UnivariateEncoding enc = worked_encoding();
    VerificationReport report =
        check_points(enc.game, enc.witness, {{rat(1, 4)}, {rat(1, 2)}});
    std::string text = report.to_text();
    CHECK(text.find("point ( 1/4 )") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("fail") != std::string::npos);
    CHECK(text.find("passed 1/2") != std::string::npos);
}
