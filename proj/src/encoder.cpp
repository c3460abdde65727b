#include "bridged/encoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "bridged/graph_io.hpp"
#include "bridged/metric.hpp"
#include "bridged/tree_labels.hpp"

namespace bridged {

namespace {

struct Job {
    Graph graph;
    std::vector<Vertex> global;  // local id -> global id
    std::uint32_t depth = 0;
};

std::map<std::pair<Vertex, Vertex>, Distance> near_pairs(const Graph& g, const Star& star, const std::vector<Vertex>& global) {
    std::map<std::pair<Vertex, Vertex>, Distance> near;
    const auto members = star.vertices();
    std::vector<Distance> dist(g.vertex_count(), kUnreachable);
    std::vector<char> in_star(g.vertex_count(), 0);
    for (std::size_t i = 1; i < members.size(); ++i) in_star[static_cast<std::size_t>(members[i])] = 1;

    std::vector<Vertex> queue;
    for (std::size_t i = 1; i < members.size(); ++i) {
        const Vertex s = members[i];
        queue.assign(1, s);
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const Vertex v = queue[h];
            const Distance dv = dist[static_cast<std::size_t>(v)];
            if (dv > 0) {
                const Vertex a = global[static_cast<std::size_t>(s)];
                const Vertex b = global[static_cast<std::size_t>(v)];
                if (a < b) near[{a, b}] = dv;
            }
            if (dv == 3) continue;
            for (Vertex w : g.neighbors(v)) {
                if (!in_star[static_cast<std::size_t>(w)] || dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
                dist[static_cast<std::size_t>(w)] = dv + 1;
                queue.push_back(w);
            }
        }
        for (Vertex v : queue) dist[static_cast<std::size_t>(v)] = kUnreachable;
    }
    return near;
}

void encode_job(const Job& job, std::vector<VertexLabel>& labels, EncodingTrace* trace, std::vector<Job>& pending) {
    const Graph& g = job.graph;
    const auto& global = job.global;

    DistanceMatrix d;
    try {
        d = all_pairs(g);
    } catch (const std::invalid_argument&) {
        throw ClassViolation("fiber subgraph is disconnected", {global.front()});
    }
    const LevelGeometry level = analyze_level(g, d);
    const FiberPartition& part = level.partition;
    const Vertex m = level.median;

    std::vector<std::vector<TreeLabel>> tree_labels(part.fibers.size());
    for (std::size_t f = 0; f < part.fibers.size(); ++f) {
        if (part.fibers[f].role == FiberRole::Panel) tree_labels[f] = tree_encode(level.boundaries[f]);
    }
    auto side = [&](std::size_t f, Vertex target, Vertex u) {
        const auto idx = level.boundaries[f].index_of(target);
        return SideRecord{tree_labels[f][static_cast<std::size_t>(idx)], d(u, target)};
    };

    std::uint32_t node = 0;
    if (trace) {
        node = static_cast<std::uint32_t>(trace->nodes.size());
        trace->nodes.push_back({job.depth, global[static_cast<std::size_t>(m)], global, near_pairs(g, level.star, global)});
    }

    for (std::size_t f = 0; f < part.fibers.size(); ++f) {
        const Fiber& fiber = part.fibers[f];
        std::size_t lo_fiber = 0, hi_fiber = 0;
        if (fiber.role == FiberRole::Cone) {
            auto [lo, hi] = cone_panels(level.star, fiber.root);
            lo_fiber = part.fiber_of[static_cast<std::size_t>(lo)];
            hi_fiber = part.fiber_of[static_cast<std::size_t>(hi)];
        }
        for (Vertex u : fiber.members) {
            LevelRecord rec;
            rec.median = global[static_cast<std::size_t>(m)];
            rec.dist = d(u, m);
            rec.star = fiber.label;
            if (fiber.role == FiberRole::Panel) {
                auto [e1, e2] = exits(d, level.boundaries[f], u);
                rec.left = side(f, e1, u);
                rec.right = side(f, e2, u);
            } else if (fiber.role == FiberRole::Cone) {
                rec.left = side(lo_fiber, entrance(g, d, part, level.boundaries[lo_fiber], u), u);
                rec.right = side(hi_fiber, entrance(g, d, part, level.boundaries[hi_fiber], u), u);
            }
            const auto gu = static_cast<std::size_t>(global[static_cast<std::size_t>(u)]);
            labels[gu].levels.push_back(std::move(rec));
            if (trace) trace->steps[gu].push_back({node, global[static_cast<std::size_t>(fiber.root)], fiber.role});
        }
        if (fiber.members.size() >= 2) {
            auto sub = induced_subgraph(g, fiber.members);
            Job next{std::move(sub.graph), {}, job.depth + 1};
            next.global.reserve(sub.to_parent.size());
            for (Vertex v : sub.to_parent) next.global.push_back(global[static_cast<std::size_t>(v)]);
            pending.push_back(std::move(next));
        }
    }
}

}  // namespace

std::vector<VertexLabel> encode_graph(const Graph& g, EncodingTrace* trace) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("cannot encode an empty graph");
    if (!is_connected(g)) throw std::invalid_argument("cannot encode a disconnected graph");
    std::vector<VertexLabel> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v].id = static_cast<Vertex>(v);
    if (trace) {
        trace->nodes.clear();
        trace->steps.assign(n, {});
    }
    if (n == 1) return labels;

    std::vector<Job> pending;
    {
        Job root{g, {}, 0};
        root.global.resize(n);
        for (std::size_t v = 0; v < n; ++v) root.global[v] = static_cast<Vertex>(v);
        pending.push_back(std::move(root));
    }
    while (!pending.empty()) {
        Job job = std::move(pending.back());
        pending.pop_back();
        try {
            encode_job(job, labels, trace, pending);
        } catch (const ClassViolation& e) {
            std::vector<Vertex> witness;
            for (Vertex v : e.witness()) witness.push_back(job.global.at(static_cast<std::size_t>(v)));
            throw ClassViolation(e.what(), std::move(witness));
        }
    }
    return labels;
}

LabelSet encode_label_set(const Graph& g, EncodingTrace* trace) {
    LabelSet set;
    set.instance_hash = instance_hash(g);
    for (const auto& label : encode_graph(g, trace)) set.labels.push_back(serialize(label));
    return set;
}

const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::Same: return "same";
        case PairClass::Separated: return "separated";
        case PairClass::AlmostSeparated: return "almost_separated";
        case PairClass::OnePC: return "1pc";
        case PairClass::TwoCC: return "2cc";
    }
    return "?";
}

PairTruth classify_pair(const EncodingTrace& trace, Vertex u, Vertex v) {
    if (u == v) return {};
    const auto& su = trace.steps.at(static_cast<std::size_t>(u));
    const auto& sv = trace.steps.at(static_cast<std::size_t>(v));
    std::size_t level = 0;
    while (level + 1 < std::min(su.size(), sv.size()) && su[level + 1].node == sv[level + 1].node) ++level;
    if (su.empty() || sv.empty() || su[level].node != sv[level].node) throw std::logic_error("vertices never share a level");

    PairTruth truth;
    truth.level = static_cast<std::uint32_t>(level);
    truth.node = su[level].node;
    const TraceStep& a = su[level];
    const TraceStep& b = sv[level];
    if (a.root == b.root) throw std::logic_error("pair shares a fiber at its deepest common level");
    if (a.role == FiberRole::Center || b.role == FiberRole::Center) {
        truth.kind = PairClass::Separated;
        return truth;
    }
    const auto& near = trace.nodes[truth.node].near;
    const auto it = near.find({std::min(a.root, b.root), std::max(a.root, b.root)});
    const Distance k = it == near.end() ? 4 : it->second;

    const int cones = (a.role == FiberRole::Cone) + (b.role == FiberRole::Cone);
    if (cones == 0) {
        truth.kind = k == 1 ? PairClass::AlmostSeparated : PairClass::Separated;
    } else if (cones == 1) {
        truth.kind = k == 1 ? PairClass::OnePC : k == 2 ? PairClass::AlmostSeparated : PairClass::Separated;
    } else {
        if (k == 1) throw std::logic_error("adjacent cone roots");
        truth.kind = k == 2 ? PairClass::TwoCC : k == 3 ? PairClass::AlmostSeparated : PairClass::Separated;
    }
    return truth;
}

}  // namespace bridged
