#include "bridged/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "bridged/class_check.hpp"
#include "bridged/generators.hpp"
#include "bridged/metric.hpp"

namespace bridged {

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

// Pairwise distances along parent edges, by member index.
std::vector<std::vector<Distance>> tree_metric(const TotalBoundaryTree& t) {
    const std::size_t s = t.size();
    std::vector<std::vector<std::size_t>> adj(s);
    for (std::size_t i = 0; i < s; ++i) {
        if (t.parent[i] < 0) continue;
        adj[i].push_back(static_cast<std::size_t>(t.parent[i]));
        adj[static_cast<std::size_t>(t.parent[i])].push_back(i);
    }
    std::vector<std::vector<Distance>> out(s, std::vector<Distance>(s, kUnreachable));
    std::vector<std::size_t> queue;
    for (std::size_t src = 0; src < s; ++src) {
        auto& row = out[src];
        row[src] = 0;
        queue.assign(1, src);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (std::size_t w : adj[queue[h]]) {
                if (row[w] != kUnreachable) continue;
                row[w] = row[queue[h]] + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

void check_partition(const Graph& g, const DistanceMatrix& d, const LevelGeometry& level, InvariantReport& r) {
    const auto& part = level.partition;
    const std::size_t n = g.vertex_count();
    const Vertex m = level.median;

    std::vector<int> seen(n, 0);
    for (std::size_t f = 0; f < part.fibers.size(); ++f) {
        for (Vertex v : part.fibers[f].members) {
            ++seen[static_cast<std::size_t>(v)];
            if (part.fiber_of[static_cast<std::size_t>(v)] != f) r.fail("partition", cat("vertex ", v, " listed in a fiber it is not mapped to"));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v] != 1) r.fail("partition", cat("vertex ", v, " appears in ", seen[v], " fibers"));
    }
    r.count("partition");

    for (const auto& f : part.fibers) {
        const Distance dr = d(f.root, m);
        const bool role_ok = (f.role == FiberRole::Center && f.root == m && f.members.size() == 1) ||
                             (f.role == FiberRole::Panel && dr == 1) || (f.role == FiberRole::Cone && dr == 2);
        if (!role_ok) r.fail("roles", cat("fiber rooted at ", f.root, " has role ", to_string(f.role), " at distance ", dr));
        if (2 * f.members.size() > n) r.fail("balance", cat("fiber rooted at ", f.root, " has ", f.members.size(), " of ", n, " vertices"));
        if (f.role == FiberRole::Cone) {
            std::size_t panels = 0;
            for (Vertex w : g.neighbors(f.root)) panels += part.fiber_containing(w).role == FiberRole::Panel && part.root_of(w) == w;
            if (panels != 2) r.fail("roles", cat("cone ", f.root, " is 1-neighboring ", panels, " panels"));
        }
        r.count("roles");
        r.count("balance");

        // starshaped: I(u, root) stays in the fiber
        const auto own = part.fiber_of[static_cast<std::size_t>(f.root)];
        auto rx = d.row(f.root);
        for (Vertex u : f.members) {
            auto ru = d.row(u);
            const Distance dux = ru[static_cast<std::size_t>(f.root)];
            for (std::size_t w = 0; w < n; ++w) {
                if (ru[w] + rx[w] == dux && part.fiber_of[w] != own) {
                    r.fail("starshaped", cat("I(", u, ",", f.root, ") leaves the fiber at ", w));
                    break;
                }
            }
        }
        r.count("starshaped", f.members.size());

        if (f.members.size() >= 2) {
            auto sub = induced_subgraph(g, f.members);
            for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
                auto local = bfs_distances(sub.graph, static_cast<Vertex>(i));
                for (std::size_t j = 0; j < local.size(); ++j) {
                    if (local[j] != d(sub.to_parent[i], sub.to_parent[j])) {
                        r.fail("isometry", cat("fiber ", f.root, ": pair (", sub.to_parent[i], ",", sub.to_parent[j], ") has inner distance ", local[j]));
                        i = sub.to_parent.size();
                        break;
                    }
                }
            }
        }
        r.count("isometry");
    }
}

void check_edges(const Graph& g, const DistanceMatrix& d, const LevelGeometry& level, InvariantReport& r) {
    const auto& part = level.partition;
    const Vertex m = level.median;
    for (auto [a, b] : g.edges()) {
        const Fiber& fa = part.fiber_containing(a);
        const Fiber& fb = part.fiber_containing(b);
        if (fa.root == fb.root) continue;
        r.count("cross_edges");
        if (fa.role == FiberRole::Center || fb.role == FiberRole::Center) {
            const Vertex other = fa.role == FiberRole::Center ? b : a;
            if (part.root_of(other) != other || part.fiber_containing(other).role != FiberRole::Panel) {
                r.fail("cross_edges", cat("center ", m, " adjacent to non-root ", other));
            }
            continue;
        }
        if (fa.role == FiberRole::Cone && fb.role == FiberRole::Cone) {
            r.fail("cross_edges", cat("cone-cone edge ", a, "-", b));
            continue;
        }
        if (fa.role == FiberRole::Panel && fb.role == FiberRole::Panel) {
            // two neighbors of m lie in distinct panels and may be adjacent
            if (!(d(a, m) == 1 && d(b, m) == 1)) r.fail("cross_edges", cat("panel-panel edge ", a, "-", b));
            continue;
        }
        const Vertex u = fa.role == FiberRole::Panel ? a : b;
        const Vertex v = fa.role == FiberRole::Panel ? b : a;
        const Vertex x = part.root_of(u);
        const Vertex y = part.root_of(v);
        const Distance k = d(v, y);
        // u == x is the star edge x~y itself, where d(u,y) = 1 and d(u,x) = 0
        const bool distances_ok = u == x || (d(u, y) == d(u, x) && (d(u, x) == k || d(u, x) == k + 1));
        if (!g.adjacent(x, y) || !distances_ok) {
            r.fail("cross_edges", cat("panel-cone edge ", u, "-", v, " breaks the distance rule (x=", x, ", y=", y, ")"));
        }
    }
}

void check_boundaries(const Graph& g, const DistanceMatrix& d, const LevelGeometry& level, InvariantReport& r) {
    const auto& part = level.partition;
    const std::size_t nf = part.fibers.size();
    std::vector<std::vector<std::vector<Distance>>> metric(nf);

    for (std::size_t f = 0; f < nf; ++f) {
        const Fiber& fiber = part.fibers[f];
        if (fiber.role == FiberRole::Center) continue;
        const TotalBoundaryTree& t = level.boundaries[f];
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t.parent[i] < 0) continue;
            const Vertex p = t.members[static_cast<std::size_t>(t.parent[i])];
            if (!g.adjacent(t.members[i], p) || t.depth[static_cast<std::size_t>(t.parent[i])] + 1 != t.depth[i] ||
                t.depth[i] != d(t.members[i], fiber.root)) {
                r.fail("boundary_tree", cat("parent edge ", t.members[i], "-", p, " is not a shortest-path step"));
            }
        }
        metric[f] = tree_metric(t);
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (metric[f][i][j] > 2 * d(t.members[i], t.members[j])) {
                    r.fail("boundary_tree", cat("tree distance of ", t.members[i], ",", t.members[j], " exceeds twice the graph distance"));
                }
            }
        }
        r.count("boundary_tree");

        if (fiber.role != FiberRole::Panel) continue;
        for (Vertex u : fiber.members) {
            Vertex e1 = 0, e2 = 0;
            try {
                std::tie(e1, e2) = exits(d, t, u);
            } catch (const ClassViolation& e) {
                r.fail("exits", e.what());
                continue;
            }
            const auto i1 = static_cast<std::size_t>(t.index_of(e1));
            const auto i2 = static_cast<std::size_t>(t.index_of(e2));
            for (std::size_t j = 0; j < t.size(); ++j) {
                const Distance via = std::min(d(u, e1) + metric[f][i1][j], d(u, e2) + metric[f][i2][j]);
                if (via > 2 * d(u, t.members[j])) {
                    r.fail("exits", cat("exit bound fails for u=", u, " and boundary vertex ", t.members[j]));
                    break;
                }
            }
            r.count("exits");
        }
    }

    for (std::size_t f = 0; f < nf; ++f) {
        const Fiber& cone = part.fibers[f];
        if (cone.role != FiberRole::Cone) continue;
        auto [lo, hi] = cone_panels(level.star, cone.root);
        for (Vertex w : {lo, hi}) {
            const auto pf = part.fiber_of[static_cast<std::size_t>(w)];
            const TotalBoundaryTree& t = level.boundaries[pf];
            for (Vertex v : cone.members) {
                Vertex e = 0;
                try {
                    e = entrance(g, d, part, t, v);
                } catch (const ClassViolation& ex) {
                    r.fail("entrance", ex.what());
                    continue;
                }
                const auto ie = static_cast<std::size_t>(t.index_of(e));
                for (Vertex q : metric_projection(d, v, part.fibers[pf].members)) {
                    const auto iq = static_cast<std::size_t>(t.index_of(q));
                    if (metric[pf][ie][iq] > d(v, e) || d(v, e) != d(v, q)) {
                        r.fail("entrance", cat("entrance ", e, " of ", v, " is too deep relative to ", q));
                    }
                }
                r.count("entrance");
            }
        }
    }
}

}  // namespace

void InvariantReport::fail(const std::string& property, const std::string& detail) {
    failures.push_back(property + ": " + detail);
}

void InvariantReport::merge(const InvariantReport& other) {
    for (const auto& [k, v] : other.checked) checked[k] += v;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

InvariantReport check_level(const Graph& g, const DistanceMatrix& d, const LevelGeometry& level) {
    InvariantReport r;
    check_partition(g, d, level, r);
    check_edges(g, d, level, r);
    check_boundaries(g, d, level, r);
    return r;
}

InvariantReport check_metric(const Graph& g, const DistanceMatrix& d, std::size_t triples, std::uint64_t seed) {
    InvariantReport r;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
        if (!spheres_triangle_free(g, d, u)) r.fail("spheres", cat("a sphere around ", u, " contains a triangle"));
    }
    r.count("spheres", static_cast<std::size_t>(n));

    Rng rng(seed);
    for (std::size_t s = 0; s < triples; ++s) {
        const Vertex u1 = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const Vertex u2 = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const Vertex u3 = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto [a, b, c] = quasi_median(d, u1, u2, u3);
        if (d(a, b) != d(b, c) || d(a, b) != d(a, c)) {
            r.fail("quasi_median", cat("triangle (", a, ",", b, ",", c, ") of (", u1, ",", u2, ",", u3, ") is not equilateral"));
        }
        if (d(u1, u2) != d(u1, a) + d(a, b) + d(b, u2) || d(u2, u3) != d(u2, b) + d(b, c) + d(c, u3) ||
            d(u1, u3) != d(u1, a) + d(a, c) + d(c, u3)) {
            r.fail("quasi_median", cat("quasi-median of (", u1, ",", u2, ",", u3, ") is off the geodesics"));
        }
        r.count("quasi_median");
    }
    return r;
}

InvariantReport check_structure(const Graph& g, const StructureOptions& options) {
    InvariantReport report;
    struct Node {
        Graph graph;
        std::size_t depth;
    };
    DistanceMatrix top = all_pairs(g);
    report.merge(check_metric(g, top, options.quasi_median_triples, options.seed));

    std::vector<Node> pending;
    pending.push_back({g, 0});
    bool first = true;
    while (!pending.empty()) {
        Node node = std::move(pending.back());
        pending.pop_back();
        if (node.graph.vertex_count() < 2) continue;
        DistanceMatrix d = first ? std::move(top) : all_pairs(node.graph);
        first = false;
        LevelGeometry level;
        try {
            level = analyze_level(node.graph, d);
        } catch (const ClassViolation& e) {
            report.fail("partition", cat("depth ", node.depth, ": ", e.what()));
            continue;
        }
        report.merge(check_level(node.graph, d, level));
        if (node.depth >= options.max_depth) continue;
        for (const auto& f : level.partition.fibers) {
            if (f.members.size() >= 2) pending.push_back({induced_subgraph(node.graph, f.members).graph, node.depth + 1});
        }
    }
    return report;
}

}  // namespace bridged
