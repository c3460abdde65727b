#include "bridged/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "bridged/generators.hpp"
#include "bridged/graph_io.hpp"
#include "bridged/metric.hpp"

namespace bridged {

void RatioStats::add(double ratio) {
    if (pairs == 0 || ratio < min_ratio) min_ratio = ratio;
    if (pairs == 0 || ratio > max_ratio) max_ratio = ratio;
    sum_ratio += ratio;
    ++pairs;
}

void RatioStats::merge(const RatioStats& o) {
    if (o.pairs == 0) return;
    if (pairs == 0 || o.min_ratio < min_ratio) min_ratio = o.min_ratio;
    if (pairs == 0 || o.max_ratio > max_ratio) max_ratio = o.max_ratio;
    sum_ratio += o.sum_ratio;
    pairs += o.pairs;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("BRIDGED_THREADS")) {
        const long t = std::strtol(env, nullptr, 10);
        if (t > 0) return static_cast<unsigned>(t);
    }
    return 1;
}

namespace {

constexpr std::size_t kMaxFindings = 100;

std::size_t bucket(Distance exact, Distance est) {
    if (est < exact) return 0;
    if (est == exact) return 1;
    // compare est/exact against thresholds without floating point
    if (2 * est <= 3 * exact) return 2;
    if (est <= 2 * exact) return 3;
    if (est <= 3 * exact) return 4;
    if (est <= 4 * exact) return 5;
    return 6;
}

void note(std::vector<PairFinding>& list, PairFinding f) {
    if (list.size() < kMaxFindings) list.push_back(std::move(f));
}

const char* expected_branch(PairClass c) {
    switch (c) {
        case PairClass::OnePC: return "pc";
        case PairClass::TwoCC: return "cc";
        default: return "default";
    }
}

struct Worker {
    const std::vector<VertexLabel>& labels;
    const EncodingTrace& trace;
    VerifyReport part;

    void check(Vertex u, Vertex v, Distance exact) {
        const DecodeResult r = decode_detailed(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]);
        if (u == v) {
            if (r.estimate != 0) note(part.violations, {u, v, 0, r.estimate, "nonzero self distance"});
            return;
        }
        const double ratio = static_cast<double>(r.estimate) / exact;
        part.overall.add(ratio);
        ++part.histogram[bucket(exact, r.estimate)];
        if (r.estimate < exact || r.estimate > 4 * exact) note(part.violations, {u, v, exact, r.estimate, "stretch outside [1,4]"});

        const PairTruth truth = classify_pair(trace, u, v);
        part.by_class[to_string(truth.kind)].add(ratio);
        part.by_branch[to_string(r.branch)].add(ratio);
        if (truth.level > 0) ++part.recursed_pairs;
        if (std::string(expected_branch(truth.kind)) != to_string(r.branch)) {
            note(part.soundness, {u, v, exact, r.estimate, std::string("decoder took ") + to_string(r.branch) + " for a " + to_string(truth.kind) + " pair"});
        }
        if (r.branch == DecodeBranch::Default) {
            if (truth.kind == PairClass::Separated && r.estimate != exact) note(part.refinement, {u, v, exact, r.estimate, "separated pair not exact"});
            if (truth.kind == PairClass::AlmostSeparated && r.estimate > 2 * exact) note(part.refinement, {u, v, exact, r.estimate, "almost separated pair above 2x"});
        }
    }
};

void merge_into(VerifyReport& out, const VerifyReport& in) {
    out.overall.merge(in.overall);
    for (std::size_t i = 0; i < out.histogram.size(); ++i) out.histogram[i] += in.histogram[i];
    for (const auto& [k, s] : in.by_class) out.by_class[k].merge(s);
    for (const auto& [k, s] : in.by_branch) out.by_branch[k].merge(s);
    out.recursed_pairs += in.recursed_pairs;
    for (const auto& f : in.violations) note(out.violations, f);
    for (const auto& f : in.refinement) note(out.refinement, f);
    for (const auto& f : in.soundness) note(out.soundness, f);
}

}  // namespace

VerifyReport verify_labels(const Graph& g, const LabelSet& labels, const VerifyOptions& options) {
    const std::size_t n = g.vertex_count();
    VerifyReport report;
    report.vertices = n;
    report.instance_hash = instance_hash(g);
    if (labels.instance_hash != report.instance_hash || labels.size() != n) {
        throw InstanceMismatch("label set (hash " + hash_hex(labels.instance_hash) + ", n=" + std::to_string(labels.size()) +
                               ") does not belong to this graph (hash " + hash_hex(report.instance_hash) + ", n=" + std::to_string(n) + ")");
    }
    if (options.sample == 0 && n > options.all_pairs_cap) {
        throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; all-pairs verification is capped at " +
                                    std::to_string(options.all_pairs_cap) + " (use sampling)");
    }

    std::vector<VertexLabel> decoded(n);
    for (std::size_t v = 0; v < n; ++v) decoded[v] = labels.label(static_cast<Vertex>(v));

    EncodingTrace trace;
    const auto fresh = encode_graph(g, &trace);
    for (std::size_t v = 0; v < n; ++v) {
        if (!(fresh[v] == decoded[v]) && report.integrity.size() < kMaxFindings) {
            report.integrity.push_back("stored label of vertex " + std::to_string(v) + " differs from a fresh encoding");
        }
    }

    const unsigned threads = std::max(1u, options.threads ? options.threads : default_thread_count());
    std::vector<Worker> workers;
    for (unsigned t = 0; t < threads; ++t) workers.push_back({decoded, trace, {}});

    if (options.sample == 0) {
        auto run = [&](unsigned t) {
            for (std::size_t u = t; u < n; u += threads) {
                const auto dist = bfs_distances(g, static_cast<Vertex>(u));
                for (std::size_t v = 0; v < n; ++v) workers[t].check(static_cast<Vertex>(u), static_cast<Vertex>(v), dist[v]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(run, t);
        run(0);
        for (auto& th : pool) th.join();
    } else {
        report.sampled = true;
        Rng rng(options.seed);
        std::vector<std::pair<Vertex, Vertex>> pairs(options.sample);
        for (auto& [u, v] : pairs) {
            u = static_cast<Vertex>(rng.below(n));
            v = static_cast<Vertex>(rng.below(n));
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<Distance> dist;
        Vertex current = -1;
        for (auto [u, v] : pairs) {
            if (u != current) {
                dist = bfs_distances(g, u);
                current = u;
            }
            workers[0].check(u, v, dist[static_cast<std::size_t>(v)]);
        }
    }
    for (const auto& w : workers) merge_into(report, w.part);
    return report;
}

}  // namespace bridged
