#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bridged/decoder.hpp"
#include "bridged/encoder.hpp"
#include "bridged/generators.hpp"
#include "bridged/graph_io.hpp"
#include "bridged/labels.hpp"
#include "bridged/metric.hpp"
#include "bridged/verify.hpp"
#include "oracles.hpp"

using namespace bridged;

namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

SideRecord side(TreeLabel t, Distance d) { return {std::move(t), d}; }

}  // namespace

TEST_CASE("varint serialization") {
    VertexLabel single{7, {}};
    auto bytes = serialize(single);
    CHECK(bytes == std::vector<std::uint8_t>{7, 0});
    CHECK(deserialize(bytes) == single);

    VertexLabel big{300, {}};
    CHECK(serialize(big) == std::vector<std::uint8_t>{0xAC, 0x02, 0});

    LevelRecord panel{1000, 3, StarLabel(2), side({{4, 1}, {0, 2}}, 5), side({{4, 3}}, 6)};
    LevelRecord center{1000, 0, StarLabel{}, std::nullopt, std::nullopt};
    LevelRecord cone{17, 2, StarLabel(1, 3), side({{0, 0}}, 1), side({{2, 9}}, 4)};
    VertexLabel full{42, {panel, cone, center}};
    CHECK(deserialize(serialize(full)) == full);
}

TEST_CASE("malformed bytes raise parse errors with offsets") {
    LevelRecord cone{17, 2, StarLabel(1, 3), side({{0, 0}}, 1), side({{2, 9}}, 4)};
    const auto bytes = serialize(VertexLabel{42, {cone}});
    for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
        std::vector<std::uint8_t> prefix(bytes.begin(), bytes.begin() + static_cast<long>(cut));
        CHECK_THROWS_AS(deserialize(prefix), ParseError);
    }
    auto extra = bytes;
    extra.push_back(0);
    try {
        deserialize(extra);
        FAIL("trailing byte accepted");
    } catch (const ParseError& e) {
        CHECK(e.position() == bytes.size());
    }
    // star size 3 is impossible
    CHECK_THROWS_AS(deserialize(std::vector<std::uint8_t>{1, 1, 0, 0, 3, 1, 2, 3}), ParseError);
    // an endless varint
    CHECK_THROWS_AS(deserialize(std::vector<std::uint8_t>(12, 0xFF)), ParseError);
}

TEST_CASE("base64") {
    for (std::string s : {"", "f", "fo", "foo", "foob", "fooba", "foobar"}) {
        std::vector<std::uint8_t> b(s.begin(), s.end());
        CHECK(base64_decode(base64_encode(b)) == b);
    }
    CHECK(base64_encode(std::vector<std::uint8_t>{'f', 'o', 'o', 'b', 'a', 'r'}) == "Zm9vYmFy");
    CHECK(base64_encode(std::vector<std::uint8_t>{'f', 'o'}) == "Zm8=");
    CHECK_THROWS_AS(base64_decode("Zm8"), ParseError);
    CHECK_THROWS_AS(base64_decode("Z!8="), ParseError);
    CHECK_THROWS_AS(base64_decode("Z=8="), ParseError);
}

TEST_CASE("encoder: small cases") {
    auto one = encode_graph(Graph(1, {}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].levels.empty());
    CHECK(serialize(one[0]).size() == 2);

    auto p5 = encode_graph(oracle::path(5));
    for (const auto& l : p5) {
        REQUIRE_FALSE(l.levels.empty());
        CHECK(l.levels[0].median == 2);
        CHECK(l.levels.size() <= 3);
    }
    CHECK(p5[2].levels.size() == 1);
    CHECK(p5[2].levels[0].star.empty());
    CHECK_THROWS(encode_graph(oracle::make(3, {{0, 1}})));
}

TEST_CASE("encoder rejects graphs outside the class mid-way") {
    // C6 passes the star construction at the top but has no valid partition
    CHECK_THROWS_AS(encode_graph(oracle::cycle(6)), ClassViolation);
    try {
        encode_graph(oracle::cycle(4));
        FAIL("C4 encoded");
    } catch (const ClassViolation& e) {
        CHECK_FALSE(e.witness().empty());
        for (Vertex v : e.witness()) CHECK(v < 4);
    }
}

TEST_CASE("encoder: record shapes and level counts") {
    for (const Graph& g : {glued_triangles(4, 6, 1), random_instance(300, 5), oracle::sector_disk(5, 7)}) {
        EncodingTrace trace;
        auto labels = encode_graph(g, &trace);
        const std::size_t bound = ceil_log2(g.vertex_count()) + 1;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            const auto& l = labels[v];
            CHECK(l.id == static_cast<Vertex>(v));
            CHECK(l.levels.size() <= bound);
            REQUIRE(l.levels.size() == trace.steps[v].size());
            for (std::size_t i = 0; i < l.levels.size(); ++i) {
                const auto& rec = l.levels[i];
                const auto& step = trace.steps[v][i];
                CHECK(rec.median == trace.nodes[step.node].median);
                CHECK(rec.left.has_value() == !rec.star.empty());
                CHECK(rec.right.has_value() == !rec.star.empty());
                CHECK(rec.star.size() == (step.role == FiberRole::Center ? 0u : step.role == FiberRole::Panel ? 1u : 2u));
                if (step.role == FiberRole::Center) CHECK(static_cast<Vertex>(v) == rec.median);
            }
        }
    }
}

TEST_CASE("dist_pc and dist_cc") {
    SUBCASE("collapsed panel-cone case returns d(v, v')") {
        TreeLabel at{{3, 0}};
        LevelRecord panel{0, 2, StarLabel(2), side(at, 0), side(at, 0)};
        LevelRecord cone{0, 3, StarLabel(2, 4), side(at, 5), side({{7, 0}}, 9)};
        CHECK(dist_pc(panel, cone) == 5);
    }
    SUBCASE("side selection follows the smaller value") {
        TreeLabel a{{0, 1}}, b{{0, 3}};
        LevelRecord panel{0, 2, StarLabel(4), side(a, 1), side(b, 2)};
        LevelRecord cone{0, 3, StarLabel(2, 4), side({{9, 0}}, 100), side({{0, 2}}, 5)};
        // right side (panel 4), entrance at tree distance 3 and 5 from the exits
        CHECK(dist_pc(panel, cone) == 5 + std::min(3 + 1, 5 + 2));
        CHECK_THROWS(dist_pc(LevelRecord{0, 2, StarLabel(7), side(a, 1), side(b, 2)}, cone));
    }
    SUBCASE("shared entrance") {
        TreeLabel e{{5, 0}};
        LevelRecord u{0, 3, StarLabel(1, 2), side({{1, 1}}, 7), side(e, 2)};
        LevelRecord v{0, 3, StarLabel(2, 6), side(e, 4), side({{1, 1}}, 7)};
        CHECK(dist_cc(u, v) == 2 + 0 + 4);
        CHECK_THROWS(dist_cc(u, u));
    }
}

TEST_CASE("decoder: identical ids and trees") {
    auto p = encode_graph(oracle::path(9));
    CHECK(decode(p[4], p[4]) == 0);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Graph t = random_tree(150, seed);
        auto labels = encode_graph(t);
        auto d = all_pairs(t);
        for (Vertex u = 0; u < 150; ++u)
            for (Vertex v = 0; v < 150; ++v) REQUIRE(decode(labels[u], labels[v]) == d(u, v));
    }
}

TEST_CASE("decoder: flat triangle stretch and refinement by class") {
    Graph g = flat_triangle(6);
    EncodingTrace trace;
    auto labels = encode_graph(g, &trace);
    auto d = all_pairs(g);
    std::map<PairClass, std::size_t> seen;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            const auto r = decode_detailed(labels[u], labels[v]);
            const auto truth = classify_pair(trace, u, v);
            ++seen[truth.kind];
            CHECK(r.estimate >= d(u, v));
            CHECK(r.estimate <= 4 * d(u, v));
            CHECK(r.estimate == decode(labels[v], labels[u]));
            switch (truth.kind) {
                case PairClass::Separated:
                    CHECK(r.branch == DecodeBranch::Default);
                    CHECK(r.estimate == d(u, v));
                    break;
                case PairClass::AlmostSeparated:
                    CHECK(r.branch == DecodeBranch::Default);
                    CHECK(r.estimate <= 2 * d(u, v));
                    break;
                case PairClass::OnePC: CHECK(r.branch == DecodeBranch::PanelCone); break;
                case PairClass::TwoCC: CHECK(r.branch == DecodeBranch::ConeCone); break;
                case PairClass::Same: FAIL("distinct vertices classified as same"); break;
            }
        }
    CHECK(seen.size() == 4);
}

TEST_CASE("label sets: round trip, files and instance checks") {
    Graph g = random_instance(500, 3);
    EncodingTrace trace;
    LabelSet set = encode_label_set(g, &trace);
    CHECK(set.instance_hash == instance_hash(g));
    auto labels = encode_graph(g);
    for (std::size_t v = 0; v < set.size(); ++v) {
        CHECK(serialize(deserialize(set.labels[v])) == set.labels[v]);
        CHECK(set.label(static_cast<Vertex>(v)) == labels[v]);
    }

    std::stringstream file;
    write_labels(file, set);
    LabelSet back = read_labels(file);
    CHECK(back.instance_hash == set.instance_hash);
    CHECK(back.labels == set.labels);

    LabelSet other = encode_label_set(random_instance(500, 4));
    CHECK_THROWS_AS(decode_between(set, 0, other, 1), InstanceMismatch);
    CHECK(decode_between(set, 0, back, 1) == decode(labels[0], labels[1]));
    CHECK_THROWS_AS(verify_labels(g, other), InstanceMismatch);

    auto corrupt = [&](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_labels(in), ParseError);
    };
    const std::string good = file.str();
    corrupt("");
    corrupt("#bridged-labels v2 n=1 hash=0000000000000000\n0\tAAA=\n");
    corrupt(good.substr(0, good.size() / 2));
    std::string swapped = good;
    swapped.replace(swapped.find("\n1\t"), 3, "\n7\t");
    corrupt(swapped);
    std::string garbage = good;
    garbage[garbage.find("\n3\t") + 4] = '*';
    corrupt(garbage);
}

TEST_CASE("verify report") {
    Graph g = glued_triangles(4, 5, 2);
    LabelSet set = encode_label_set(g);
    auto r = verify_labels(g, set);
    CHECK(r.ok());
    CHECK(r.overall.pairs == g.vertex_count() * (g.vertex_count() - 1));
    CHECK(r.overall.min_ratio >= 1.0);
    CHECK(r.overall.max_ratio <= 4.0);
    std::size_t hist = 0;
    for (auto h : r.histogram) hist += h;
    CHECK(hist == r.overall.pairs);
    CHECK(r.histogram[0] == 0);
    CHECK(r.histogram[6] == 0);

    // a label that still parses but lies is caught by the integrity comparison
    LabelSet tampered = set;
    auto l = tampered.label(5);
    l.levels[0].dist += 1;
    tampered.labels[5] = serialize(l);
    auto bad = verify_labels(g, tampered);
    CHECK_FALSE(bad.integrity.empty());
    CHECK_FALSE(bad.ok());

    VerifyOptions opt;
    opt.all_pairs_cap = 10;
    CHECK_THROWS_AS(verify_labels(g, set, opt), std::invalid_argument);
    opt.sample = 500;
    auto sampled = verify_labels(g, set, opt);
    CHECK(sampled.sampled);
    CHECK(sampled.ok());

    VerifyOptions threaded;
    threaded.threads = 3;
    auto par = verify_labels(g, set, threaded);
    CHECK(par.overall.pairs == r.overall.pairs);
    CHECK(par.histogram == r.histogram);
}
