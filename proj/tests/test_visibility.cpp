#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vis/generators.hpp"
#include "vis/visibility.hpp"

using namespace vis;

static Point P(long x, long y) { return {Rational(x), Rational(y)}; }

TEST_CASE("visibility graph on three collinear points") {
    PointSet A({P(0, 0), P(1, 0), P(2, 0)});
    auto G = visibility_graph(A);
    CHECK(G.adjacent(0, 1));
    CHECK(G.adjacent(1, 2));
    CHECK(!G.adjacent(0, 2));
    CHECK(G.witness(0, 2) == 1);
    CHECK(G.witness(2, 0) == 1);
    CHECK(G.witness(0, 1) == -1);
    CHECK(G.edge_count() == 2);
}

TEST_CASE("one-blocker antipodal pairs are blocked by the origin") {
    auto A = gen_one_blocker(4);  // circle indices 0..3, origin 4
    auto G = visibility_graph(A);
    CHECK(!G.adjacent(0, 1));
    CHECK(G.witness(0, 1) == 4);
    CHECK(!G.adjacent(2, 3));
    CHECK(G.witness(2, 3) == 4);
    for (int i : {0, 1})
        for (int j : {2, 3}) CHECK(G.adjacent(i, j));
    for (int i = 0; i < 4; ++i) CHECK(G.adjacent(i, 4));
}

TEST_CASE("no three collinear gives a complete graph") {
    auto A = gen_random_general(12, 300, 99);
    auto G = visibility_graph(A);
    CHECK(G.edge_count() == 66);
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
    for (const PointSet& A : {gen_grid(5, 5), gen_cubic_power(6), gen_one_blocker(10)}) {
        auto Gp = visibility_graph(A);
        auto Gs = visibility_graph_serial(A);
        REQUIRE(Gp.size() == Gs.size());
        for (int i = 0; i < Gp.size(); ++i)
            for (int j = 0; j < Gp.size(); ++j) CHECK(Gp.adjacent(i, j) == Gs.adjacent(i, j));
        CHECK(Gp.witnesses() == Gs.witnesses());
    }
}

TEST_CASE("witnesses satisfy strictly_between") {
    auto A = gen_grid(4, 4);
    auto G = visibility_graph(A);
    CHECK(!G.witnesses().empty());
    for (auto& [pair, w] : G.witnesses())
        CHECK(strictly_between(A[pair.first], A[pair.second], A[w]));
}

TEST_CASE("max clique on a complete graph") {
    auto A = gen_random_general(7, 200, 3);
    auto r = max_visible_clique(visibility_graph(A), 100000);
    CHECK(r.optimal);
    CHECK(r.clique.size() == 7);
}

TEST_CASE("max clique within the circle of a one-blocker set") {
    auto A = gen_one_blocker(6);
    std::vector<int> X{0, 1, 2, 3, 4, 5};
    auto induced = visibility_graph(A).induced(X);
    auto r = max_visible_clique(induced, 100000);
    CHECK(r.optimal);
    CHECK(r.clique.size() == 3);  // m/2
}

TEST_CASE("perfect-matching complement clique") {
    // Non-edges form a perfect matching on 2t vertices: clique = t.
    int t = 6;
    VisibilityGraph G(2 * t);
    for (int i = 0; i < 2 * t; ++i)
        for (int j = i + 1; j < 2 * t; ++j)
            if (!(j == i + 1 && i % 2 == 0)) G.set_edge(i, j, true);
    auto r = max_visible_clique(G, 1000000);
    CHECK(r.optimal);
    CHECK(static_cast<int>(r.clique.size()) == t);
}

TEST_CASE("clique search agrees with brute force") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 8 + static_cast<int>(rng() % 8);
        std::vector<Point> pts;
        std::set<Point> seen;
        while (static_cast<int>(pts.size()) < n) {
            Point p = P(rng() % 6, rng() % 6);
            if (seen.insert(p).second) pts.push_back(p);
        }
        auto G = visibility_graph(PointSet(std::move(pts)));
        auto r = max_visible_clique(G, 10000000);
        REQUIRE(r.optimal);
        CHECK(r.clique.size() == brute_force_max_clique(G).size());
    }
}

TEST_CASE("tiny budget returns a flagged non-optimal clique") {
    auto G = visibility_graph(gen_grid(5, 5));
    auto r = max_visible_clique(G, 2);
    CHECK(!r.optimal);
    CHECK(!r.clique.empty());
    CHECK_THROWS(max_visible_clique(G, 0));
}

TEST_CASE("blocker_set") {
    auto A = gen_one_blocker(6);
    std::vector<int> X{0, 1, 2, 3, 4, 5};
    auto B = blocker_set(A, X);
    CHECK(B.indices == std::set<int>{6});
    CHECK(B.b == 1);
    CHECK(B.disjoint_from_x);

    auto none = blocker_set(gen_random_general(8, 150, 5), {0, 1, 2, 3});
    CHECK(none.b == 0);

    PointSet L({P(0, 0), P(1, 0), P(2, 0)});
    auto deg = blocker_set(L, {0, 1, 2});
    CHECK(deg.indices == std::set<int>{1});
    CHECK(!deg.disjoint_from_x);
}

TEST_CASE("blocker_colouring_cover on one-blocker sets") {
    auto A = gen_one_blocker(10);
    std::vector<int> X;
    for (int i = 0; i < 10; ++i) X.push_back(i);
    auto cover = blocker_colouring_cover(A, X);
    CHECK(cover.certified);
    CHECK(cover.b == 1);
    CHECK(cover.parts.size() <= 2);
    size_t largest = 0;
    for (auto& p : cover.parts) largest = std::max(largest, p.size());
    CHECK(largest >= 5);
    CHECK(recertify_cover(A, cover));
}

TEST_CASE("b = 0 gives a single part") {
    auto A = gen_random_general(9, 200, 12);
    std::vector<int> X{0, 2, 4, 6, 8};
    auto cover = blocker_colouring_cover(A, X);
    CHECK(cover.b == 0);
    REQUIRE(cover.parts.size() == 1);
    CHECK(cover.parts[0].size() == 5);
}

TEST_CASE("three collinear points in X are rejected") {
    PointSet A({P(0, 0), P(1, 0), P(2, 0), P(0, 5)});
    CHECK_THROWS_AS(blocker_colouring_cover(A, {0, 1, 2}), ThreeCollinearInPatch);
}

TEST_CASE("fuzzed covers respect the b+1 bound") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        // Circle points (no 3 collinear) plus random interior clutter.
        int half = 3 + static_cast<int>(rng() % 5);
        auto A0 = gen_one_blocker(2 * half);
        std::vector<Point> pts = A0.points();
        int extra = 1 + static_cast<int>(rng() % 4);
        std::set<Point> seen(pts.begin(), pts.end());
        while (extra > 0) {
            Point p{rat(static_cast<long>(rng() % 19) - 9, 20),
                    rat(static_cast<long>(rng() % 19) - 9, 20)};
            if (seen.insert(p).second) {
                pts.push_back(p);
                --extra;
            }
        }
        PointSet A(std::move(pts));
        std::vector<int> X;
        for (int i = 0; i < 2 * half; ++i) X.push_back(i);
        auto cover = blocker_colouring_cover(A, X);
        CHECK(cover.certified);
        CHECK(cover.matchings_ok);
        CHECK(cover.max_degree_h <= cover.b);
        CHECK(static_cast<int>(cover.parts.size()) <= cover.b + 1);
        CHECK(recertify_cover(A, cover));
    }
}
