#ifndef BRIDGED_GRAPH_HPP
#define BRIDGED_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridged {

using Vertex = std::int32_t;
using Distance = std::int32_t;

inline constexpr Distance kUnreachable = -1;

/// Raised when an input graph falls outside the supported class, or when
/// a structural property the encoder relies on fails. `witness` holds the
/// offending vertices (global ids where the caller knows them).
class ClassViolation : public std::runtime_error {
public:
    ClassViolation(const std::string& what, std::vector<Vertex> witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::vector<Vertex>& witness() const noexcept { return witness_; }

private:
    std::vector<Vertex> witness_;
};

/**
 * Undirected simple graph on dense ids 0..n-1 with sorted adjacency lists.
 *
 * Construction validates: no self-loops, no duplicate edges, ids in range.
 * Connectivity is not enforced here (all_pairs rejects disconnected input).
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;
    bool valid(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

    /// Edges (u, v) with u < v, ascending lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Sorted set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    std::span<const Vertex> members() const noexcept { return members_; }
    Vertex front() const { return members_.front(); }

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<Vertex> members_;
};

/// Dense n x n hop-distance table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    Distance operator()(Vertex u, Vertex v) const noexcept {
        return data_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    }
    std::span<const Distance> row(Vertex u) const noexcept {
        return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
    }
    std::span<Distance> row(Vertex u) noexcept {
        return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
    }

private:
    std::size_t n_ = 0;
    std::vector<Distance> data_;
};

/// Subgraph induced by `members` (ascending ids); local vertex i is members[i].
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

bool is_connected(const Graph& g);

}  // namespace bridged

#endif  // BRIDGED_GRAPH_HPP
