// bridged-dls: generate, check, encode, decode, verify, bench, inspect.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridged/class_check.hpp"
#include "bridged/decoder.hpp"
#include "bridged/encoder.hpp"
#include "bridged/generators.hpp"
#include "bridged/graph_io.hpp"
#include "bridged/invariants.hpp"
#include "bridged/labels.hpp"
#include "bridged/metric.hpp"
#include "bridged/star_fiber.hpp"
#include "bridged/verify.hpp"

#ifndef BRIDGED_BUILD_ID
#define BRIDGED_BUILD_ID "unknown"
#endif

using json = nlohmann::ordered_json;
using namespace bridged;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kRejected = 1;  // graph outside the class, or verification failed
constexpr int kError = 2;     // bad input / usage

struct Failure : std::runtime_error {
    int code;
    Failure(const std::string& what, int c) : std::runtime_error(what), code(c) {}
};

json provenance(const Graph& g) {
    return {{"build", BRIDGED_BUILD_ID}, {"instance_hash", hash_hex(instance_hash(g))}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw Failure("cannot write " + path, kError);
    out << j.dump(2) << '\n';
}

Graph make_graph(const std::string& family, const std::vector<long long>& p, std::uint64_t seed) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi) {
            throw Failure("family '" + family + "' takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) + " params", kError);
        }
        for (long long x : p) {
            if (x < 0) throw Failure("params must be non-negative", kError);
        }
    };
    if (family == "triangle") {
        need(1, 1);
        return flat_triangle(static_cast<int>(p[0]));
    }
    if (family == "lozenge") {
        need(2, 2);
        return lozenge(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (family == "burned") {
        need(2, 3);
        const std::size_t budget = p.size() == 3 ? static_cast<std::size_t>(p[2]) : kUnlimitedRemovals;
        return burned_lozenge(static_cast<int>(p[0]), static_cast<int>(p[1]), seed, budget);
    }
    if (family == "glued") {
        need(2, 2);
        return glued_triangles(static_cast<int>(p[0]), static_cast<int>(p[1]), seed);
    }
    if (family == "random") {
        need(0, 1);
        return random_instance(p.empty() ? 200 : static_cast<std::size_t>(p[0]), seed);
    }
    if (family == "tree") {
        need(0, 1);
        return random_tree(p.empty() ? 200 : static_cast<std::size_t>(p[0]), seed);
    }
    throw Failure("unknown family '" + family + "'", kError);
}

json verdict_json(const ClassVerdict& v) {
    json j = {{"ok", v.ok}};
    if (!v.ok) {
        j["reason"] = v.reason;
        j["witness"] = v.witness;
    }
    return j;
}

json stats_json(const RatioStats& s) {
    return {{"pairs", s.pairs}, {"min", s.min_ratio}, {"max", s.max_ratio}, {"mean", s.mean()}};
}

json findings_json(const std::vector<PairFinding>& list) {
    json out = json::array();
    for (const auto& f : list) out.push_back({{"u", f.u}, {"v", f.v}, {"exact", f.exact}, {"estimate", f.estimate}, {"what", f.what}});
    return out;
}

json report_json(const VerifyReport& r) {
    json hist = json::object();
    for (std::size_t i = 0; i < r.histogram.size(); ++i) hist[kHistogramBuckets[i]] = r.histogram[i];
    json by_class = json::object();
    for (const auto& [k, s] : r.by_class) by_class[k] = stats_json(s);
    json by_branch = json::object();
    for (const auto& [k, s] : r.by_branch) by_branch[k] = stats_json(s);
    return {{"sampled", r.sampled},
            {"ratio", stats_json(r.overall)},
            {"histogram", hist},
            {"by_class", by_class},
            {"by_branch", by_branch},
            {"recursed_pairs", r.recursed_pairs},
            {"violations", findings_json(r.violations)},
            {"refinement_failures", findings_json(r.refinement)},
            {"soundness_failures", findings_json(r.soundness)},
            {"integrity_failures", r.integrity},
            {"ok", r.ok()}};
}

std::size_t label_bits(const std::vector<std::uint8_t>& bytes) { return 8 * bytes.size(); }

// ---------------------------------------------------------------- commands

struct GenArgs {
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    Graph g = make_graph(a.family, a.params, a.seed);
    if (a.out.empty() || a.out == "-") {
        write_graph(std::cout, g);
    } else {
        write_graph_file(a.out, g);
    }
    return kOk;
}

int cmd_check(const std::string& path, const std::string& out) {
    Graph g = read_graph_file(path);
    json j = provenance(g);
    const bool connected = is_connected(g);
    const ClassVerdict k4 = is_k4_free(g);
    const ClassVerdict br = is_bridged(g);
    j["connected"] = connected;
    j["k4_free"] = k4.ok;
    j["bridged"] = br.ok;
    j["witnesses"] = {{"k4", verdict_json(k4)}, {"bridged", verdict_json(br)}};
    emit(j, out);
    return k4.ok && br.ok ? kOk : kRejected;
}

struct EncodeArgs {
    std::string graph, out, stats;
    bool skip_check = false;
};

int cmd_encode(const EncodeArgs& a) {
    Graph g = read_graph_file(a.graph);
    json j = provenance(g);
    if (!a.skip_check) {
        if (!is_connected(g)) throw Failure("graph is disconnected", kRejected);
        const ClassVerdict k4 = is_k4_free(g);
        const ClassVerdict br = k4.ok ? is_bridged(g) : ClassVerdict{};
        if (!k4.ok || !br.ok) {
            j["error"] = "graph is not K4-free bridged";
            j["witness"] = k4.ok ? verdict_json(br) : verdict_json(k4);
            emit(j, a.stats);
            return kRejected;
        }
    }
    const auto t0 = std::chrono::steady_clock::now();
    LabelSet set;
    std::vector<VertexLabel> labels;
    try {
        labels = encode_graph(g);
    } catch (const ClassViolation& e) {
        j["error"] = e.what();
        j["witness"] = e.witness();
        emit(j, a.stats);
        return kRejected;
    }
    set.instance_hash = instance_hash(g);
    for (const auto& l : labels) set.labels.push_back(serialize(l));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_label_file(a.out, set);

    std::size_t max_bits = 0, total_bits = 0, max_levels = 0;
    json per_vertex = json::array();
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const std::size_t bits = label_bits(set.labels[v]);
        max_bits = std::max(max_bits, bits);
        total_bits += bits;
        max_levels = std::max(max_levels, labels[v].levels.size());
        per_vertex.push_back({{"id", v}, {"bits", bits}, {"levels", labels[v].levels.size()}});
    }
    j["encode_ms"] = ms;
    j["max_bits"] = max_bits;
    j["mean_bits"] = labels.empty() ? 0.0 : static_cast<double>(total_bits) / static_cast<double>(labels.size());
    j["max_levels"] = max_levels;
    j["vertices"] = per_vertex;
    emit(j, a.stats);
    return kOk;
}

struct DecodeArgs {
    std::string labels, other, graph;
    Vertex u = 0, v = 0;
};

int cmd_decode(const DecodeArgs& a) {
    const LabelSet first = read_label_file(a.labels);
    const LabelSet second = a.other.empty() ? first : read_label_file(a.other);
    if (!a.graph.empty()) {
        const auto h = instance_hash(read_graph_file(a.graph));
        if (h != first.instance_hash) throw InstanceMismatch("label file does not belong to " + a.graph);
    }
    for (auto [set, x] : {std::pair{&first, a.u}, std::pair{&second, a.v}}) {
        if (x < 0 || static_cast<std::size_t>(x) >= set->size()) throw Failure("unknown vertex id " + std::to_string(x), kError);
    }
    std::cout << decode_between(first, a.u, second, a.v) << '\n';
    return kOk;
}

struct VerifyArgs {
    std::string graph, labels, out;
    std::size_t sample = 0;
    std::size_t max_n = kAllPairsCap;
    std::uint64_t seed = 1;
    bool invariants = false;
};

int cmd_verify(const VerifyArgs& a) {
    Graph g = read_graph_file(a.graph);
    LabelSet set = read_label_file(a.labels);
    VerifyOptions opt;
    opt.sample = a.sample;
    opt.all_pairs_cap = a.max_n;
    opt.seed = a.seed;
    const VerifyReport r = verify_labels(g, set, opt);
    json j = provenance(g);
    j["report"] = report_json(r);
    bool ok = r.ok();
    if (a.invariants) {
        const InvariantReport inv = check_structure(g, {64, 200, a.seed});
        j["invariants"] = {{"checked", inv.checked}, {"failures", inv.failures}, {"ok", inv.ok()}};
        ok = ok && inv.ok();
    }
    emit(j, a.out);
    return ok ? kOk : kRejected;
}

struct BenchArgs {
    std::string family = "random";
    std::vector<std::size_t> sizes{128, 256, 512, 1024, 2048};
    std::vector<std::uint64_t> seeds{1};
    std::size_t sample = 20000;
    std::string out;
};

int cmd_bench(const BenchArgs& a) {
    std::ostringstream csv;
    csv << "family,n,seed,encode_ms,max_label_bits,mean_ratio,max_ratio\n";
    for (std::uint64_t seed : a.seeds) {
        for (std::size_t n : a.sizes) {
            Graph g = a.family == "random" ? random_instance(n, seed)
                      : a.family == "tree" ? random_tree(n, seed)
                                           : throw Failure("bench supports families random and tree", kError);
            const auto t0 = std::chrono::steady_clock::now();
            const LabelSet set = encode_label_set(g);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            std::size_t max_bits = 0;
            for (const auto& l : set.labels) max_bits = std::max(max_bits, label_bits(l));
            VerifyOptions opt;
            opt.sample = g.vertex_count() <= kAllPairsCap ? 0 : a.sample;
            opt.seed = seed;
            const VerifyReport r = verify_labels(g, set, opt);
            csv << a.family << ',' << g.vertex_count() << ',' << seed << ',' << ms << ',' << max_bits << ',' << r.overall.mean()
                << ',' << r.overall.max_ratio << '\n';
        }
    }
    if (a.out.empty() || a.out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream(a.out) << csv.str();
    }
    return kOk;
}

json inspect_json(const Graph& g) {
    const DistanceMatrix d = all_pairs(g);
    const LevelGeometry level = analyze_level(g, d);
    json star = {{"center", level.median}, {"neighbors", level.star.neighbors}};
    json apexes = json::array();
    for (const auto& ap : level.star.apexes) apexes.push_back({{"vertex", ap.vertex}, {"between", {ap.low, ap.high}}});
    star["apexes"] = apexes;
    json fibers = json::array();
    for (std::size_t f = 0; f < level.partition.fibers.size(); ++f) {
        const Fiber& fb = level.partition.fibers[f];
        json jf = {{"root", fb.root}, {"role", to_string(fb.role)}, {"star_label", fb.label.to_string()}, {"size", fb.members.size()},
                   {"members", fb.members}};
        if (fb.role != FiberRole::Center) {
            const TotalBoundaryTree& t = level.boundaries[f];
            json parent = json::object();
            for (std::size_t i = 0; i < t.size(); ++i) {
                parent[std::to_string(t.members[i])] = t.parent[i] < 0 ? json(nullptr) : json(t.members[static_cast<std::size_t>(t.parent[i])]);
            }
            jf["boundary"] = {{"members", t.members}, {"parent", parent}};
        }
        fibers.push_back(jf);
    }
    return {{"median", level.median}, {"star", star}, {"fibers", fibers}};
}

int cmd_inspect(const std::string& path, bool star, bool pairs, const std::string& out) {
    Graph g = read_graph_file(path);
    json j = provenance(g);
    if (star) j["level0"] = inspect_json(g);
    if (pairs) {
        EncodingTrace trace;
        const auto labels = encode_graph(g, &trace);
        json list = json::array();
        const auto n = static_cast<Vertex>(g.vertex_count());
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const PairTruth t = classify_pair(trace, u, v);
                const DecodeResult r = decode_detailed(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]);
                list.push_back({{"u", u}, {"v", v}, {"class", to_string(t.kind)}, {"level", t.level}, {"branch", to_string(r.branch)}, {"estimate", r.estimate}});
            }
        }
        j["pairs"] = list;
    }
    emit(j, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance labels for K4-free bridged graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BRIDGED_BUILD_ID);

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "write a generated graph");
    c_gen->add_option("--family", gen.family, "triangle | lozenge | burned | glued | random | tree")
        ->required()
        ->check(CLI::IsMember({"triangle", "lozenge", "burned", "glued", "random", "tree"}));
    c_gen->add_option("--params", gen.params, "family parameters (see README)");
    c_gen->add_option("--seed", gen.seed, "generator seed");
    c_gen->add_option("--out", gen.out, "output file (default stdout)");

    std::string check_graph, check_out;
    auto* c_check = app.add_subcommand("check", "class membership verdict as JSON");
    c_check->add_option("graph,--graph", check_graph)->required();
    c_check->add_option("--out", check_out);

    EncodeArgs enc;
    auto* c_enc = app.add_subcommand("encode", "write the label file and print stats JSON");
    c_enc->add_option("--graph", enc.graph)->required();
    c_enc->add_option("--out", enc.out, "label file")->required();
    c_enc->add_option("--stats", enc.stats, "stats JSON file (default stdout)");
    c_enc->add_flag("--skip-check", enc.skip_check, "do not run the class check first");

    DecodeArgs dec;
    auto* c_dec = app.add_subcommand("decode", "estimate d(u, v) from two labels");
    c_dec->add_option("--labels", dec.labels)->required();
    c_dec->add_option("--other", dec.other, "take v's label from this file instead");
    c_dec->add_option("--graph", dec.graph, "refuse unless the labels belong to this graph");
    c_dec->add_option("u", dec.u)->required();
    c_dec->add_option("v", dec.v)->required();

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "compare decoded estimates against BFS");
    c_ver->add_option("--graph", ver.graph)->required();
    c_ver->add_option("--labels", ver.labels)->required();
    c_ver->add_option("--sample", ver.sample, "check K random ordered pairs instead of all");
    c_ver->add_option("--max-n", ver.max_n, "all-pairs cap");
    c_ver->add_option("--seed", ver.seed);
    c_ver->add_flag("--invariants", ver.invariants, "also run the structural invariant suite");
    c_ver->add_option("--out", ver.out);

    BenchArgs bench;
    auto* c_bench = app.add_subcommand("bench", "CSV of encode time, label size and stretch");
    c_bench->add_option("--family", bench.family)->check(CLI::IsMember({"random", "tree"}));
    c_bench->add_option("--sizes", bench.sizes)->delimiter(',');
    c_bench->add_option("--seeds", bench.seeds)->delimiter(',');
    c_bench->add_option("--sample", bench.sample, "pairs sampled above the all-pairs cap");
    c_bench->add_option("--out", bench.out);

    std::string insp_graph, insp_out;
    bool insp_star = false, insp_pairs = false;
    auto* c_insp = app.add_subcommand("inspect", "dump encoder internals as JSON");
    c_insp->add_option("--graph", insp_graph)->required();
    c_insp->add_flag("--star", insp_star, "top-level star, fibers and boundary trees");
    c_insp->add_flag("--pairs", insp_pairs, "ground-truth class and decoder branch of every pair");
    c_insp->add_option("--out", insp_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_gen) return cmd_gen(gen);
        if (*c_check) return cmd_check(check_graph, check_out);
        if (*c_enc) return cmd_encode(enc);
        if (*c_dec) return cmd_decode(dec);
        if (*c_ver) return cmd_verify(ver);
        if (*c_bench) return cmd_bench(bench);
        if (*c_insp) return cmd_inspect(insp_graph, insp_star || !insp_pairs, insp_pairs, insp_out);
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const InstanceMismatch& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kError;
    } catch (const ClassViolation& e) {
        std::cerr << "class violation: " << e.what() << '\n';
        return kRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
