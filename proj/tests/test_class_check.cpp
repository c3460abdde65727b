#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridged/class_check.hpp"
#include "bridged/generators.hpp"
#include "bridged/metric.hpp"
#include "oracles.hpp"

using namespace bridged;

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!g.adjacent(w[i], w[j])) return false;
    return true;
}

// consecutive witness vertices adjacent, all other pairs not
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& w) {
    const std::size_t k = w.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(w[i], w[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("K4 detection") {
    auto k4 = is_k4_free(oracle::complete(4));
    CHECK_FALSE(k4.ok);
    CHECK(k4.witness == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(is_k4_free(random_tree(50, 3)).ok);
    CHECK(is_k4_free(flat_triangle(3)).ok);

    Rng rng(5);
    for (int s = 0; s < 200; ++s) {
        Graph g = oracle::random_graph(7, 1, 2, rng);
        auto r = is_k4_free(g);
        CHECK(r.ok == !oracle::has_k4(g));
        if (!r.ok) CHECK(is_clique(g, r.witness));
    }
}

TEST_CASE("small non-bridged graphs are rejected with genuine witnesses") {
    auto c4 = is_bridged(oracle::cycle(4));
    CHECK_FALSE(c4.ok);
    CHECK(c4.reason == "induced_c4");
    CHECK(is_induced_cycle(oracle::cycle(4), c4.witness));

    auto c5 = is_bridged(oracle::cycle(5));
    CHECK_FALSE(c5.ok);
    CHECK(c5.reason == "induced_c5");
    CHECK(is_induced_cycle(oracle::cycle(5), c5.witness));

    // the rim of the 5-wheel is an induced, isometric C5
    auto w5 = is_bridged(oracle::wheel(5));
    CHECK_FALSE(w5.ok);
    CHECK(w5.reason == "induced_c5");
    CHECK(is_induced_cycle(oracle::wheel(5), w5.witness));
    CHECK(is_bridged(oracle::wheel(6)).ok);

    auto c6 = is_bridged(oracle::cycle(6));
    CHECK_FALSE(c6.ok);
    CHECK_FALSE(is_bridged(oracle::make(4, {{0, 1}, {2, 3}})).ok);
}

TEST_CASE("accepted graphs") {
    CHECK(is_bridged(oracle::complete(3)).ok);
    CHECK(is_bridged(Graph(1, {})).ok);
    for (std::uint64_t s = 1; s <= 5; ++s) CHECK(is_bridged(random_tree(60, s)).ok);
    for (int k = 0; k <= 10; ++k) {
        Graph t = flat_triangle(k);
        CHECK(is_bridged(t).ok);
        CHECK(is_k4_free(t).ok);
    }
    for (int k = 0; k <= 4; ++k) CHECK_FALSE(oracle::has_long_isometric_cycle(flat_triangle(k)));
}

TEST_CASE("both characterizations agree on every graph with at most 6 vertices") {
    std::size_t bridged = 0, total = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
            for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j) slots.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> e;
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask >> b & 1) e.push_back(slots[b]);
            Graph g(n, e);
            if (!oracle::connected(g)) continue;
            ++total;
            const bool expected = oracle::bridged_by_cycles(g);
            REQUIRE(is_bridged(g).ok == expected);
            bridged += expected;
        }
    }
    CHECK(total > 20000);
    CHECK(bridged > 1000);
}

TEST_CASE("witnesses of random rejects are genuine") {
    Rng rng(23);
    for (int s = 0; s < 3000; ++s) {
        Graph g = oracle::random_graph(5 + rng.below(5), 1 + rng.below(3), 5, rng);
        if (!oracle::connected(g)) continue;
        auto r = is_bridged(g);
        if (r.ok) continue;
        if (r.reason == "induced_c4" || r.reason == "induced_c5") {
            CHECK(is_induced_cycle(g, r.witness));
        } else {
            REQUIRE(r.witness.size() >= 3);
        }
    }
}

TEST_CASE("spheres are triangle-free in the class") {
    for (Vertex u = 0; u < 6; ++u) CHECK(spheres_triangle_free(random_tree(20, 1), all_pairs(random_tree(20, 1)), u));
    Graph t4 = flat_triangle(4);
    auto d = all_pairs(t4);
    CHECK(spheres_triangle_free(t4, d, 0));
    // brute force over all triangles, bucketed by distance to the corner
    for (Vertex a = 0; a < 15; ++a)
        for (Vertex b = a + 1; b < 15; ++b)
            for (Vertex c = b + 1; c < 15; ++c)
                if (t4.adjacent(a, b) && t4.adjacent(b, c) && t4.adjacent(a, c)) CHECK_FALSE((d(0, a) == d(0, b) && d(0, b) == d(0, c)));

    Graph k4 = oracle::complete(4);
    CHECK_FALSE(spheres_triangle_free(k4, all_pairs(k4), 0));

    for (const Graph& g : {glued_triangles(4, 5, 3), random_instance(150, 8)}) {
        auto dg = all_pairs(g);
        for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u) REQUIRE(spheres_triangle_free(g, dg, u));
    }
}

TEST_CASE("balls are convex in the class") {
    Graph g = glued_triangles(5, 4, 2);
    auto d = all_pairs(g);
    for (Vertex c = 0; c < static_cast<Vertex>(g.vertex_count()); c += 3)
        for (Distance r = 0; r <= 4; ++r) CHECK(is_convex(d, ball(d, c, r)));
}

TEST_CASE("require_k4_free_bridged throws with witness") {
    Graph k4 = oracle::complete(4);
    try {
        require_k4_free_bridged(k4, all_pairs(k4));
        FAIL("expected a violation");
    } catch (const ClassViolation& e) {
        CHECK(e.witness().size() == 4);
    }
    Graph ok = flat_triangle(3);
    CHECK_NOTHROW(require_k4_free_bridged(ok, all_pairs(ok)));
}
