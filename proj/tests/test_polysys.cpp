#include <doctest.h>

#include "helpers.hpp"
#include "polygame/capacity.hpp"
#include "polygame/horner.hpp"
#include "polygame/normalize.hpp"
#include "polygame/parser.hpp"
#include "polygame/roots.hpp"

using namespace polygame;

namespace {

Polynomial worked_quadratic() {
    Polynomial p(1);
    p.add_term(Monomial({2}), rat(1));
    p.add_term(Monomial({1}), rat(-1));
    p.add_term(Monomial({0}), rat(3, 16));
    return p;
}

std::vector<Rational> univariate(const PolySystem& sys) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(sys.polys[0].degree_in(0)) + 1,
                                 Rational(0));
    for (const auto& [mono, c] : sys.polys[0].terms)
        coeffs[static_cast<std::size_t>(mono.degree_of(0))] = c;
    return coeffs;
}

}  // namespace

TEST_CASE("parser reads systems with exact coefficients") {
    PolySystem sys = parse_system("vars: x1\neq: 1*x1^2 - 1*x1 + 3/16 = 0\n");
    CHECK(sys.n == 1);
    CHECK(sys.m() == 1);
    CHECK(sys.polys[0] == worked_quadratic());

    PolySystem two = parse_system("vars: x1 x2\neq: 1*x1 = 0\neq: 1*x2 = 0\n");
    CHECK(two.n == 2);
    CHECK(two.m() == 2);
    CHECK(two.polys[0] == Polynomial::variable(2, 0));
    CHECK(two.polys[1] == Polynomial::variable(2, 1));

    // Bare coefficients, implicit 1* factors, comments and blank lines.
    PolySystem mixed = parse_system(
        "# comment\nvars: x1 x2\n\neq: x1*x2 - 1/8 = 0 # trailing\n");
    CHECK(mixed.polys[0].degree_in(0) == 1);
    CHECK(mixed.polys[0].degree_in(1) == 1);
    CHECK(mixed.polys[0].constant_term() == rat(-1, 8));
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_system("vars: x1\neq: x1^2 =\n"), ParseError);
    CHECK_THROWS_AS(parse_system("vars: x1\neq: x2 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_system("vars: x1\neq: x1 - x1 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_system(""), ParseError);
    CHECK_THROWS_AS(parse_system("vars: x2 x1\neq: x1 = 0\n"), ParseError);
    try {
        parse_system("vars: x1\neq: x1 +\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
}

TEST_CASE("degree profile reads maximal exponents") {
    DegreeProfile p1 = degree_profile(PolySystem{1, {worked_quadratic()}});
    CHECK(p1.d[0][0] == 2);
    CHECK(p1.d_i[0] == 2);
    CHECK(p1.d_max == 2);

    PolySystem sys = parse_system("vars: x1 x2\neq: x1^2*x2 - 1 = 0\neq: x2^3 = 0\n");
    DegreeProfile p2 = degree_profile(sys);
    CHECK(p2.d == std::vector<std::vector<int>>{{2, 1}, {0, 3}});
    CHECK(p2.d_i == std::vector<int>{2, 3});
    CHECK(p2.d_max == 3);

    DegreeProfile p3 = degree_profile(parse_system("vars: x1 x2\neq: x1 + x2 = 0\n"));
    CHECK(p3.d == std::vector<std::vector<int>>{{1, 1}});
}

TEST_CASE("3-player capacity counts the gadget equations") {
    DegreeProfile quad = degree_profile(PolySystem{1, {worked_quadratic()}});
    ThreePlayerCapacity c1 = capacity_3p(quad);
    CHECK(c1.D == 2);
    CHECK(c1.formats == std::array<long long, 3>{2, 2, 3});

    PolySystem lin = parse_system("vars: x1\neq: x1 - 1/2 = 0\n");
    ThreePlayerCapacity c2 = capacity_3p(degree_profile(lin));
    CHECK(c2.D == 1);
    CHECK(c2.formats == std::array<long long, 3>{2, 1, 2});

    // Uniform-degree systems collapse to m((1+d)^n - 1).
    testing::Rng rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= 3; ++d) {
                DegreeProfile profile;
                profile.n = n;
                profile.m = m;
                profile.d.assign(static_cast<std::size_t>(m),
                                 std::vector<int>(static_cast<std::size_t>(n), d));
                profile.d_i.assign(static_cast<std::size_t>(n), d);
                profile.d_max = d;
                long long expected = 1;
                for (int i = 0; i < n; ++i) expected *= 1 + d;
                expected = m * (expected - 1);
                CHECK(capacity_3p(profile).D == expected);
            }
}

TEST_CASE("binary capacity sums the column maxima") {
    DegreeProfile quad = degree_profile(PolySystem{1, {worked_quadratic()}});
    BinaryCapacity c1 = capacity_np(quad);
    CHECK(c1.Dprime == 2);
    CHECK(c1.players == 3);

    // Uniform case N = nd + m.
    PolySystem sys = parse_system("vars: x1 x2\neq: x1^2 + x2^2 - 1/8 = 0\n");
    BinaryCapacity c2 = capacity_np(degree_profile(sys));
    CHECK(c2.Dprime == 4);
    CHECK(c2.players == 5);

    DegreeProfile profile;
    profile.n = 3;
    profile.m = 2;
    profile.d = {{1, 1, 1}, {1, 0, 1}};
    profile.d_i = {1, 1, 1};
    profile.d_max = 1;
    BinaryCapacity c3 = capacity_np(profile);
    CHECK(c3.Dprime == 3);
    CHECK(c3.players == 5);
}

TEST_CASE("nested decomposition exposes the coefficient tree") {
    HornerForm form = horner_decompose(worked_quadratic());
    REQUIRE(form.degrees == std::vector<int>{2});
    REQUIRE(form.root.children.size() == 3);
    CHECK(form.root.children[0].value == rat(3, 16));
    CHECK(form.root.children[1].value == rat(-1));
    CHECK(form.root.children[2].value == rat(1));

    Polynomial prod = parse_poly_expr("x1*x2", 2);
    HornerForm pf = horner_decompose(prod);
    REQUIRE(pf.root.children.size() == 2);
    const HornerNode& c1 = pf.root.children[1];
    REQUIRE(c1.children.size() == 2);
    CHECK(c1.children[1].value == rat(1));
    CHECK(c1.children[0].value == rat(0));
    CHECK(pf.root.children[0].children[0].value == rat(0));

    Polynomial five = Polynomial::constant(1, rat(5));
    HornerForm cf = horner_decompose(five);
    CHECK(expand(cf) == five);
    CHECK(cf.root.children.size() == 1);
    CHECK(cf.root.children[0].value == rat(5));
}

TEST_CASE("decomposition round trips and evaluates consistently") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next(4));
        Polynomial p = rng.polynomial(n, 4, 5);
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(rng.next(i + 1))]);
        HornerForm form = horner_decompose(p, order);
        CHECK(expand(form) == p);
        std::vector<Rational> x = rng.point(n);
        CHECK(eval(form, x) == p.eval(x));
    }
}

TEST_CASE("polynomial evaluation is exact") {
    Polynomial p = worked_quadratic();
    CHECK(p.eval({rat(1, 4)}) == 0);
    CHECK(p.eval({rat(3, 4)}) == 0);
    testing::Rng rng(5);
    Polynomial q = rng.nonzero_polynomial(3, 3, 4);
    CHECK(q.eval({rat(0), rat(0), rat(0)}) == q.constant_term());
    CHECK_THROWS_AS(p.eval({rat(1, 2), rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("interval enclosures are sound") {
    Box unit1 = Box::unit(1);
    Polynomial affine = parse_poly_expr("x1 - 1", 1);
    Interval ia = interval_eval(horner_decompose(affine), unit1);
    CHECK(ia.lo == rat(-1));
    CHECK(ia.hi == rat(0));

    Box unit2 = Box::unit(2);
    Interval ip = interval_eval(horner_decompose(parse_poly_expr("x1*x2", 2)), unit2);
    CHECK(ip.lo == rat(0));
    CHECK(ip.hi == rat(1));

    Interval isq = interval_eval(horner_decompose(parse_poly_expr("x1^2", 1)), unit1);
    CHECK(isq.lo == rat(0));
    CHECK(isq.hi == rat(1));

    testing::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next(3));
        Polynomial p = rng.polynomial(n, 3, 4);
        HornerForm form = horner_decompose(p);
        Interval bound = interval_eval(form, Box::unit(n));
        std::vector<Rational> x = rng.point(n);
        CHECK(bound.contains(p.eval(x)));
    }
}

TEST_CASE("box change of variables clears denominators correctly") {
    // x = 0 becomes 2y - 1 with its root at 1/2.
    NormalizedSystem simple = normalize_to_box(parse_system("vars: x1\neq: x1 = 0\n"));
    Polynomial expect(1);
    expect.add_term(Monomial({1}), rat(2));
    expect.add_term(Monomial({0}), rat(-1));
    CHECK(simple.system.polys[0] == expect);
    CHECK(simple.system.polys[0].eval({rat(1, 2)}) == 0);
    CHECK(simple.map.to_original({rat(1, 2)}) == std::vector<Rational>{rat(0)});

    // x - 1 = 0 lands on u^2 + u - 1 = 0; the in-box root maps back within
    // float tolerance.
    NormalizedSystem shifted = normalize_to_box(parse_system("vars: x1\neq: x1 - 1 = 0\n"));
    std::vector<double> y = shifted.map.to_normalized({1.0});
    CHECK(std::abs(shifted.system.polys[0].eval_double(y)) <= 1e-12);
    RootList in_box = roots_in_unit_interval(univariate(shifted.system));
    CHECK(in_box.count() == 1);
    RootList wide = roots_in_open_interval(univariate(shifted.system), rat(-8), rat(8));
    CHECK(wide.count() == 2);
    // The mirror-branch root stays outside the open box.
    bool outside = false;
    for (const auto& root : wide.roots)
        if (!(root.midpoint > 0 && root.midpoint < 1)) outside = true;
    CHECK(outside);
}

TEST_CASE("points mapped through the change of variables satisfy the cleared system") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.next(2));
        // Seed u* strictly inside (-1,1) and build a system vanishing at
        // the corresponding x*.
        std::vector<Rational> ustar, xstar;
        for (int i = 0; i < n; ++i) {
            Rational u = rng.unit_rational() * 2 - 1;
            if (u == 0) u = rat(1, 3);
            ustar.push_back(u);
            xstar.push_back(u / (1 - u * u));
        }
        PolySystem sys;
        sys.n = n;
        for (int i = 0; i < n; ++i) {
            Polynomial f = Polynomial::variable(n, i) -
                           Polynomial::constant(n, xstar[static_cast<std::size_t>(i)]);
            if (trial % 2 == 0) f = f * f;  // exercise higher clearing powers
            sys.polys.push_back(std::move(f));
        }
        NormalizedSystem norm = normalize_to_box(sys);
        std::vector<Rational> ystar;
        for (int i = 0; i < n; ++i)
            ystar.push_back((ustar[static_cast<std::size_t>(i)] + 1) / (2 * norm.map.delta));
        for (const Polynomial& g : norm.system.polys) CHECK(g.eval(ystar) == 0);
        CHECK(norm.map.to_original(ystar) == xstar);
    }
}
