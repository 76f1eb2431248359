#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vis/bipoly.hpp"
#include "vis/unipoly.hpp"

using namespace vis;

static UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

TEST_CASE("rational parse and format") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("1.25")) == "5/4");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("sturm_isolate on x^3 - x") {
    auto roots = sturm_isolate(up({0, -1, 0, 1}));
    REQUIRE(roots.size() == 3);
    std::vector<long> expected{-1, 0, 1};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(roots[i].multiplicity == 1);
        CHECK(compare_root_rational(roots[i], Rational(expected[i])) == Cmp::Equal);
    }
}

TEST_CASE("sturm_isolate: no real roots") {
    CHECK(sturm_isolate(up({1, 0, 1})).empty());
}

TEST_CASE("sturm_isolate rejects zero polynomial") {
    CHECK_THROWS_AS(sturm_isolate(UniPoly()), ZeroPolynomial);
}

TEST_CASE("multiplicities via square-free decomposition") {
    // (x-1)^2 (x+2)
    UniPoly p = up({-1, 1}) * up({-1, 1}) * up({2, 1});
    auto roots = sturm_isolate(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);  // -2
    CHECK(roots[1].multiplicity == 2);  // 1
}

TEST_CASE("flex resultant of y^2 = x^3 - x has the figure root") {
    // f = y^2 - x^3 + x, restricted Hessian h = 24x*y^2 - 24x^2 - 8.
    BiPoly f = BiPoly::term(0, 2, 1) - BiPoly::term(3, 0, 1) + BiPoly::term(1, 0, 1);
    BiPoly h = BiPoly::term(1, 2, 24) - BiPoly::term(2, 0, 24) - BiPoly::term(0, 0, 8);
    UniPoly res = resultant_y(f, h);
    REQUIRE(!res.is_zero());
    auto roots = sturm_isolate(res);
    bool found = false;
    for (const auto& r : roots) {
        auto rr = refine(r, rat(1, 1000));
        if (rr.lo >= rat(146, 100) && rr.hi <= rat(147, 100)) found = true;
    }
    CHECK(found);
    // The common x-coordinates satisfy 3x^4 - 6x^2 - 1 = 0.
    UniPoly quartic = up({-1, 0, -6, 0, 3});
    CHECK(UniPoly::divrem(res, quartic).second.is_zero());
}

TEST_CASE("refine") {
    auto roots = sturm_isolate(up({-2, 0, 1}));  // x^2 - 2
    REQUIRE(roots.size() == 2);
    auto r = roots[1];  // sqrt(2)
    auto rr = refine(r, rat(1, 100));
    CHECK(rr.hi - rr.lo <= rat(1, 100));
    CHECK(rr.lo >= rat(141, 100));
    CHECK(rr.hi <= rat(142, 100));
    // Idempotence when already narrow enough.
    auto again = refine(rr, Rational(1));
    CHECK(again.lo == rr.lo);
    CHECK(again.hi == rr.hi);
    // Root at 0 of x^3 - x, width 1/8.
    auto r0 = sturm_isolate(up({0, -1, 0, 1}))[1];
    auto rz = refine(r0, rat(1, 8));
    CHECK(rz.hi - rz.lo <= rat(1, 8));
    CHECK(compare_root_rational(rz, Rational(0)) == Cmp::Equal);
}

TEST_CASE("compare_root_rational") {
    auto sqrt2 = sturm_isolate(up({-2, 0, 1}))[1];
    CHECK(compare_root_rational(sqrt2, rat(3, 2)) == Cmp::Less);
    CHECK(compare_root_rational(sqrt2, Rational(1)) == Cmp::Greater);
    auto lin = sturm_isolate(up({-5, 1}))[0];
    CHECK(compare_root_rational(lin, Rational(5)) == Cmp::Equal);
    // Designated root of x^3-x in (1/2, 2) is 1.
    IsolatedRoot one{up({0, -1, 0, 1}).square_free_part(), rat(1, 2), Rational(2), 1};
    CHECK(compare_root_rational(one, Rational(0)) == Cmp::Greater);
    CHECK(compare_root_rational(one, Rational(1)) == Cmp::Equal);
}

TEST_CASE("comparisons survive refinement") {
    auto sqrt2 = sturm_isolate(up({-2, 0, 1}))[1];
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        Rational q(static_cast<long>(rng() % 400) - 200, 100);
        q.canonicalize();
        Cmp before = compare_root_rational(sqrt2, q);
        auto rr = refine(sqrt2, rat(1, 1 << (t % 20)));
        CHECK(compare_root_rational(rr, q) == before);
    }
}

TEST_CASE("resultant_y examples") {
    BiPoly f = BiPoly::term(0, 2, 1) - BiPoly::term(3, 0, 1) + BiPoly::term(1, 0, 1);
    BiPoly g = BiPoly::term(0, 1, 2);
    UniPoly r = resultant_y(f, g);
    // -4(x^3 - x) in the Sylvester convention with f-rows first.
    CHECK(r == up({0, 4, 0, -4}));

    BiPoly f2 = BiPoly::term(0, 1, 1) - BiPoly::term(1, 0, 1);  // y - x
    BiPoly g2 = BiPoly::term(0, 1, 1) + BiPoly::term(1, 0, 1);  // y + x
    UniPoly r2 = resultant_y(f2, g2);
    CHECK((r2 == up({0, 2}) || r2 == up({0, -2})));
    CHECK(r2.eval(Rational(0)) == 0);

    BiPoly f3 = BiPoly::term(0, 2, 1) - BiPoly::term(1, 0, 1);  // y^2 - x
    CHECK(resultant_y(f3, f3).is_zero());

    CHECK_THROWS_AS(resultant_y(BiPoly::term(1, 0, 1), BiPoly::term(2, 0, 1)),
                    BothConstantInY);
}

TEST_CASE("resultant vanishes exactly at common-root abscissas") {
    std::mt19937 rng(42);
    BiPoly f = BiPoly::term(0, 2, 1) - BiPoly::term(3, 0, 1) + BiPoly::term(1, 0, 1);
    BiPoly g = f.dy();
    UniPoly res = resultant_y(f, g);
    for (int t = 0; t < 50; ++t) {
        Rational x0(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 9) + 1);
        x0.canonicalize();
        UniPoly fx = f.eval_x(x0), gx = g.eval_x(x0);
        bool common = !UniPoly::gcd(fx, gx).degree() == 0;
        bool res_zero = res.sign_at(x0) == 0;
        // Leading y-coefficients here are constants, so no infinity degeneration.
        CHECK(common == res_zero);
    }
}

TEST_CASE("isolation count matches sign-change oracle") {
    std::mt19937 rng(3);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rational> cs;
        int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i)
            cs.emplace_back(static_cast<long>(rng() % 21) - 10);
        UniPoly p(std::move(cs));
        if (p.is_zero()) continue;
        auto roots = sturm_isolate(p);
        UniPoly rad = p.square_free_part();
        auto seq = sturm_sequence(rad);
        CHECK(static_cast<int>(roots.size()) == sturm_count_all(seq));
        // Intervals are disjoint and each contains its designated root.
        for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
        for (const auto& r : roots) {
            auto rseq = sturm_sequence(r.poly);
            CHECK(sturm_count(rseq, r.lo, r.hi) == 1);
        }
    }
}

TEST_CASE("AlgReal ordering") {
    auto sqrt2 = AlgReal(sturm_isolate(up({-2, 0, 1}))[1]);
    auto sqrt3 = AlgReal(sturm_isolate(up({-3, 0, 1}))[1]);
    CHECK(sqrt2 < sqrt3);
    CHECK(sqrt2 == AlgReal(sturm_isolate(up({-2, 0, 1}))[1]));
    CHECK(sqrt2.compare(rat(3, 2)) == Cmp::Less);
    Rational mid = rational_between(sqrt2, sqrt3);
    CHECK(sqrt2.compare(mid) == Cmp::Less);
    CHECK(sqrt3.compare(mid) == Cmp::Greater);
    // sqrt(2) as a root of two different polynomials compares equal.
    UniPoly p2 = up({-2, 0, 1}) * up({5, 1});
    auto other = sturm_isolate(p2);
    REQUIRE(other.size() == 3);  // -5, -sqrt2, sqrt2
    CHECK(AlgReal(other[2]) == sqrt2);
}
