#include "bridged/graph.hpp"

#include <algorithm>
#include <string>

namespace bridged {

Graph::Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : adjacency_(vertex_count) {
    for (const auto& [u, v] : edges) {
        if (!valid(u) || !valid(v)) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an out-of-range endpoint");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end()) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
        }
    }
    edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    std::vector<Vertex> to_parent(members.begin(), members.end());
    std::sort(to_parent.begin(), to_parent.end());
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) local[static_cast<std::size_t>(to_parent[i])] = static_cast<Vertex>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        for (Vertex w : g.neighbors(to_parent[i])) {
            Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return {Graph(to_parent.size(), edges), std::move(to_parent)};
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace bridged
