#include "bridged/star_fiber.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "bridged/metric.hpp"

namespace bridged {

Vertex median_vertex(const DistanceMatrix& d) {
    if (d.size() == 0) throw std::invalid_argument("median of an empty graph");
    Vertex best = 0;
    std::int64_t best_sum = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = 0; v < d.size(); ++v) {
        std::int64_t sum = 0;
        for (Distance x : d.row(static_cast<Vertex>(v))) sum += x;
        if (sum < best_sum) {
            best_sum = sum;
            best = static_cast<Vertex>(v);
        }
    }
    return best;
}

// ---------------------------------------------------------------- Star

bool Star::contains(Vertex v) const {
    if (v == center) return true;
    if (std::binary_search(neighbors.begin(), neighbors.end(), v)) return true;
    auto it = std::lower_bound(apexes.begin(), apexes.end(), v, [](const Apex& a, Vertex x) { return a.vertex < x; });
    return it != apexes.end() && it->vertex == v;
}

std::vector<Vertex> Star::vertices() const {
    std::vector<Vertex> out{center};
    out.insert(out.end(), neighbors.begin(), neighbors.end());
    for (const auto& a : apexes) out.push_back(a.vertex);
    return out;
}

Star build_star(const Graph& g, const DistanceMatrix& d, Vertex m) {
    Star star;
    star.center = m;
    auto nm = g.neighbors(m);
    star.neighbors.assign(nm.begin(), nm.end());

    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex y : nm) {
        for (Vertex x : g.neighbors(y)) {
            if (seen[static_cast<std::size_t>(x)] || d(m, x) != 2) continue;
            seen[static_cast<std::size_t>(x)] = 1;
            std::vector<Vertex> common;
            auto nx = g.neighbors(x);
            std::set_intersection(nx.begin(), nx.end(), nm.begin(), nm.end(), std::back_inserter(common));
            if (common.size() < 2) continue;
            if (common.size() > 2) {
                throw ClassViolation("vertex at distance 2 from the star center has three common neighbors with it",
                                     {m, x, common[0], common[1], common[2]});
            }
            if (!g.adjacent(common[0], common[1])) {
                throw ClassViolation("induced 4-cycle through the star center", {m, common[0], x, common[1]});
            }
            star.apexes.push_back({x, common[0], common[1]});
        }
    }
    std::sort(star.apexes.begin(), star.apexes.end(), [](const Star::Apex& a, const Star::Apex& b) { return a.vertex < b.vertex; });
    return star;
}

// ---------------------------------------------------------------- StarLabel

StarLabel::StarLabel(std::uint32_t a, std::uint32_t b) : size_(2), values_{std::min(a, b), std::max(a, b)} {
    if (a == b) throw std::invalid_argument("pair star label needs two distinct values");
}

bool StarLabel::contains(std::uint32_t x) const noexcept {
    for (std::size_t i = 0; i < size_; ++i) {
        if (values_[i] == x) return true;
    }
    return false;
}

bool StarLabel::proper_subset_of(const StarLabel& other) const noexcept {
    if (size_ >= other.size_) return false;
    for (std::size_t i = 0; i < size_; ++i) {
        if (!other.contains(values_[i])) return false;
    }
    return true;
}

std::size_t StarLabel::intersection_size(const StarLabel& other) const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size_; ++i) count += other.contains(values_[i]) ? 1 : 0;
    return count;
}

std::uint32_t StarLabel::common_value(const StarLabel& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
        if (other.contains(values_[i])) return values_[i];
    }
    throw std::logic_error("star labels do not intersect");
}

bool StarLabel::operator==(const StarLabel& other) const noexcept {
    if (size_ != other.size_) return false;
    for (std::size_t i = 0; i < size_; ++i) {
        if (values_[i] != other.values_[i]) return false;
    }
    return true;
}

std::string StarLabel::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < size_; ++i) {
        if (i) s += ",";
        s += std::to_string(values_[i]);
    }
    return s + "}";
}

std::vector<std::pair<Vertex, StarLabel>> star_labels(const Star& star) {
    std::vector<std::pair<Vertex, StarLabel>> out;
    out.emplace_back(star.center, StarLabel{});
    auto rank = [&](Vertex y) {
        auto it = std::lower_bound(star.neighbors.begin(), star.neighbors.end(), y);
        return static_cast<std::uint32_t>(it - star.neighbors.begin()) + 1;
    };
    for (std::size_t i = 0; i < star.neighbors.size(); ++i) {
        out.emplace_back(star.neighbors[i], StarLabel(static_cast<std::uint32_t>(i) + 1));
    }
    for (const auto& a : star.apexes) out.emplace_back(a.vertex, StarLabel(rank(a.low), rank(a.high)));
    return out;
}

const char* to_string(FiberRole role) {
    switch (role) {
        case FiberRole::Center: return "center";
        case FiberRole::Panel: return "panel";
        case FiberRole::Cone: return "cone";
    }
    return "?";
}

// ---------------------------------------------------------------- partition

const Fiber& FiberPartition::fiber_rooted_at(Vertex x) const {
    for (const auto& f : fibers) {
        if (f.root == x) return f;
    }
    throw std::out_of_range("no fiber rooted at vertex " + std::to_string(x));
}

FiberPartition fiber_partition(const Graph& g, const DistanceMatrix& d, const Star& star) {
    const std::size_t n = g.vertex_count();
    FiberPartition p;
    p.fiber_of.assign(n, std::numeric_limits<std::uint32_t>::max());

    std::map<std::pair<Vertex, Vertex>, std::uint32_t> apex_by_pair;
    for (auto& [x, label] : star_labels(star)) {
        const auto idx = static_cast<std::uint32_t>(p.fibers.size());
        FiberRole role = label.empty() ? FiberRole::Center : label.size() == 1 ? FiberRole::Panel : FiberRole::Cone;
        p.fibers.push_back({x, role, label, {}});
        p.fiber_of[static_cast<std::size_t>(x)] = idx;
    }
    for (std::size_t i = 0; i < star.apexes.size(); ++i) {
        const auto& a = star.apexes[i];
        apex_by_pair[{a.low, a.high}] = static_cast<std::uint32_t>(1 + star.neighbors.size() + i);
    }
    std::vector<std::uint32_t> neighbor_fiber(n, 0);
    for (std::size_t i = 0; i < star.neighbors.size(); ++i) neighbor_fiber[static_cast<std::size_t>(star.neighbors[i])] = static_cast<std::uint32_t>(1 + i);

    std::vector<Vertex> proj;
    for (std::size_t u = 0; u < n; ++u) {
        if (p.fiber_of[u] != std::numeric_limits<std::uint32_t>::max()) continue;
        auto ru = d.row(static_cast<Vertex>(u));
        Distance best = std::numeric_limits<Distance>::max();
        proj.clear();
        for (Vertex y : star.neighbors) {
            Distance dy = ru[static_cast<std::size_t>(y)];
            if (dy < best) {
                best = dy;
                proj.assign(1, y);
            } else if (dy == best) {
                proj.push_back(y);
            }
        }
        if (proj.size() == 1) {
            p.fiber_of[u] = neighbor_fiber[static_cast<std::size_t>(proj[0])];
        } else if (proj.size() == 2) {
            auto it = apex_by_pair.find({std::min(proj[0], proj[1]), std::max(proj[0], proj[1])});
            if (it == apex_by_pair.end() || ru[static_cast<std::size_t>(p.fibers[it->second].root)] != best - 1) {
                throw ClassViolation("two-vertex projection on N[m] without an apex one step closer",
                                     {static_cast<Vertex>(u), proj[0], proj[1]});
            }
            p.fiber_of[u] = it->second;
        } else {
            std::vector<Vertex> witness{static_cast<Vertex>(u)};
            witness.insert(witness.end(), proj.begin(), proj.end());
            throw ClassViolation("projection on N[m] has more than two vertices", witness);
        }
    }
    for (std::size_t u = 0; u < n; ++u) p.fibers[p.fiber_of[u]].members.push_back(static_cast<Vertex>(u));
    return p;
}

std::optional<Distance> fiber_neighboring_k(const Graph& g, const Star& star, Vertex x, Vertex y) {
    if (x == y) return 0;
    std::map<Vertex, Distance> dist{{x, 0}};
    std::vector<Vertex> queue{x};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (w == star.center || !star.contains(w) || dist.count(w)) continue;
            dist[w] = dist[v] + 1;
            if (w == y) return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::pair<Vertex, Vertex> cone_panels(const Star& star, Vertex apex) {
    auto it = std::lower_bound(star.apexes.begin(), star.apexes.end(), apex,
                               [](const Star::Apex& a, Vertex x) { return a.vertex < x; });
    if (it == star.apexes.end() || it->vertex != apex) throw std::out_of_range("not an apex of the star");
    return {it->low, it->high};
}

// ---------------------------------------------------------------- boundaries

bool TotalBoundaryTree::contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

std::int32_t TotalBoundaryTree::index_of(Vertex v) const {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return -1;
    return static_cast<std::int32_t>(it - members.begin());
}

Distance TotalBoundaryTree::tree_distance(Vertex a, Vertex b) const {
    std::int32_t i = index_of(a);
    std::int32_t j = index_of(b);
    if (i < 0 || j < 0) throw std::out_of_range("tree_distance: vertex outside the tree");
    Distance steps = 0;
    while (depth[static_cast<std::size_t>(i)] > depth[static_cast<std::size_t>(j)]) {
        i = parent[static_cast<std::size_t>(i)];
        ++steps;
    }
    while (depth[static_cast<std::size_t>(j)] > depth[static_cast<std::size_t>(i)]) {
        j = parent[static_cast<std::size_t>(j)];
        ++steps;
    }
    while (i != j) {
        i = parent[static_cast<std::size_t>(i)];
        j = parent[static_cast<std::size_t>(j)];
        steps += 2;
    }
    return steps;
}

TotalBoundaryTree total_boundary(const Graph& g, const DistanceMatrix& d, const FiberPartition& partition, Vertex x) {
    const Fiber& fiber = partition.fiber_rooted_at(x);
    const auto own = partition.fiber_of[static_cast<std::size_t>(x)];
    TotalBoundaryTree tree;
    tree.root = x;
    for (Vertex v : fiber.members) {
        for (Vertex w : g.neighbors(v)) {
            if (partition.fiber_of[static_cast<std::size_t>(w)] != own) {
                tree.members.push_back(v);
                break;
            }
        }
    }
    if (!tree.contains(x)) throw ClassViolation("fiber root is not on its total boundary", {x});

    tree.parent.assign(tree.members.size(), -1);
    tree.depth.assign(tree.members.size(), 0);
    for (std::size_t i = 0; i < tree.members.size(); ++i) {
        const Vertex v = tree.members[i];
        const Distance dv = d(v, x);
        tree.depth[i] = dv;
        if (v == x) continue;
        std::int32_t found = -1;
        for (Vertex w : g.neighbors(v)) {
            if (d(w, x) != dv - 1) continue;
            std::int32_t idx = tree.index_of(w);
            if (idx < 0) continue;
            if (found >= 0) throw ClassViolation("boundary vertex has two parents toward the fiber root", {v, tree.members[static_cast<std::size_t>(found)], w});
            found = idx;
        }
        if (found < 0) throw ClassViolation("boundary vertex has no parent toward the fiber root", {v, x});
        tree.parent[i] = found;
    }
    return tree;
}

Vertex entrance(const Graph& g, const DistanceMatrix& d, const FiberPartition& partition,
                const TotalBoundaryTree& panel_tree, Vertex v) {
    const Fiber& panel = partition.fiber_rooted_at(panel_tree.root);
    VertexSet proj = metric_projection(d, v, panel.members);
    std::size_t induced_edges = 0;
    for (Vertex p : proj) {
        if (!panel_tree.contains(p)) throw ClassViolation("projection on a panel leaves its total boundary", {v, p});
        for (Vertex w : g.neighbors(p)) {
            if (p < w && proj.contains(w)) ++induced_edges;
        }
    }
    if (induced_edges + 1 != proj.size()) {
        std::vector<Vertex> witness{v};
        witness.insert(witness.end(), proj.begin(), proj.end());
        throw ClassViolation("projection on a panel does not induce a tree", witness);
    }
    Vertex best = -1;
    Distance best_depth = std::numeric_limits<Distance>::max();
    bool unique = true;
    for (Vertex p : proj) {
        Distance dp = d(p, panel_tree.root);
        if (dp < best_depth) {
            best_depth = dp;
            best = p;
            unique = true;
        } else if (dp == best_depth) {
            unique = false;
        }
    }
    if (!unique) throw ClassViolation("entrance is not unique", {v, best, panel_tree.root});
    return best;
}

std::pair<Vertex, Vertex> exits(const DistanceMatrix& d, const TotalBoundaryTree& tree, Vertex u) {
    if (tree.contains(u)) return {u, u};
    const Vertex x = tree.root;
    auto ru = d.row(u);
    auto rx = d.row(x);
    const Distance dux = ru[static_cast<std::size_t>(x)];
    const std::size_t s = tree.size();
    std::vector<char> in_sub(s, 0), has_child(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
        const auto t = static_cast<std::size_t>(tree.members[i]);
        in_sub[i] = ru[t] + rx[t] == dux;
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (!in_sub[i] || tree.parent[i] < 0) continue;
        const auto p = static_cast<std::size_t>(tree.parent[i]);
        if (!in_sub[p]) throw ClassViolation("interval to the root meets the boundary tree in a non-subtree", {u, tree.members[i]});
        has_child[p] = 1;
    }
    std::vector<Vertex> leaves;
    for (std::size_t i = 0; i < s; ++i) {
        if (in_sub[i] && !has_child[i]) leaves.push_back(tree.members[i]);
    }
    if (leaves.size() > 2) {
        std::vector<Vertex> witness{u};
        witness.insert(witness.end(), leaves.begin(), leaves.end());
        throw ClassViolation("interval meets the boundary tree in more than two branches", witness);
    }
    return {leaves.front(), leaves.back()};
}

LevelGeometry analyze_level(const Graph& g, const DistanceMatrix& d) {
    LevelGeometry level;
    level.median = median_vertex(d);
    level.star = build_star(g, d, level.median);
    level.partition = fiber_partition(g, d, level.star);
    level.boundaries.resize(level.partition.fibers.size());
    for (std::size_t i = 0; i < level.partition.fibers.size(); ++i) {
        const Fiber& f = level.partition.fibers[i];
        if (f.role == FiberRole::Center) continue;
        level.boundaries[i] = total_boundary(g, d, level.partition, f.root);
    }
    return level;
}

}  // namespace bridged
