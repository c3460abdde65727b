#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "bridged/generators.hpp"
#include "bridged/metric.hpp"
#include "bridged/tree_labels.hpp"
#include "oracles.hpp"

using namespace bridged;

namespace {

std::vector<std::int32_t> path_parents(std::size_t n) {
    std::vector<std::int32_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::int32_t>(i) - 1;
    return p;
}

std::vector<std::int32_t> recursive_tree(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int32_t> p(n, -1);
    for (std::size_t i = 1; i < n; ++i) p[i] = static_cast<std::int32_t>(rng.below(i));
    return p;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void expect_exact(const std::vector<std::int32_t>& parent) {
    const auto labels = tree_encode(parent);
    const auto truth = oracle::tree_distances(parent);
    REQUIRE(labels.size() == parent.size());
    for (std::size_t a = 0; a < parent.size(); ++a) {
        REQUIRE(labels[a].size() <= ceil_log2(parent.size()) + 1);
        for (std::size_t b = 0; b < parent.size(); ++b) REQUIRE(tree_decode(labels[a], labels[b]) == truth[a][b]);
    }
}

}  // namespace

TEST_CASE("single vertex") {
    auto labels = tree_encode(std::vector<std::int32_t>{-1});
    REQUIRE(labels.size() == 1);
    CHECK(labels[0] == TreeLabel{{0, 0}});
    CHECK(tree_decode(labels[0], labels[0]) == 0);
}

TEST_CASE("paths") {
    auto p5 = tree_encode(path_parents(5));
    CHECK(tree_decode(p5[0], p5[4]) == 4);
    CHECK(p5[0].front().separator == 2);  // centroid of a path is its middle
    auto p7 = tree_encode(path_parents(7));
    CHECK(tree_decode(p7[1], p7[5]) == 4);
    CHECK(tree_decode(p7[3], p7[3]) == 0);
}

TEST_CASE("star K1,3") {
    auto s = tree_encode(std::vector<std::int32_t>{-1, 0, 0, 0});
    CHECK(tree_decode(s[1], s[3]) == 2);
    CHECK(tree_decode(s[0], s[2]) == 1);
}

TEST_CASE("centroid ties go to the smaller index") {
    // path of 4: both middle vertices are centroids
    auto p4 = tree_encode(path_parents(4));
    CHECK(p4[3].front().separator == 1);
}

TEST_CASE("exact on random trees up to 2^11 vertices") {
    for (std::size_t n : {2u, 3u, 10u, 64u, 300u}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) expect_exact(recursive_tree(n, seed));
    }
    expect_exact(path_parents(257));
    expect_exact(recursive_tree(2048, 9));
}

TEST_CASE("exact on boundary trees of generated instances") {
    for (const Graph& g : {glued_triangles(5, 8, 3), random_instance(300, 4), oracle::sector_disk(5, 8)}) {
        auto d = all_pairs(g);
        auto level = analyze_level(g, d);
        for (std::size_t f = 1; f < level.partition.fibers.size(); ++f) expect_exact(level.boundaries[f].parent);
    }
}

TEST_CASE("label length grows like log^2 of the tree size") {
    // entries are O(log n) each holding O(log n)-bit numbers
    double lo = 1e9, hi = 0;
    for (std::size_t n : {128u, 512u, 2048u}) {
        auto labels = tree_encode(recursive_tree(n, 2));
        std::size_t worst = 0;
        for (const auto& l : labels) {
            std::size_t bits = 0;
            for (const auto& e : l) bits += std::bit_width(e.separator + 1u) + std::bit_width(static_cast<unsigned>(e.dist) + 1u);
            worst = std::max(worst, bits);
        }
        const double ratio = static_cast<double>(worst) / std::pow(std::log2(static_cast<double>(n)), 2);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi <= 4 * lo);
    CHECK(hi < 4.0);
}

TEST_CASE("disjoint separators give no estimate") {
    CHECK(tree_decode(TreeLabel{{1, 0}}, TreeLabel{{2, 0}}) == kUnreachable);
}
