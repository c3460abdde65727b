#ifndef BRIDGED_METRIC_HPP
#define BRIDGED_METRIC_HPP

#include <array>
#include <vector>

#include "bridged/graph.hpp"

namespace bridged {

/// Hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances. Throws std::invalid_argument on a disconnected graph.
DistanceMatrix all_pairs(const Graph& g);

/// I(u,v): every w with d(u,w) + d(w,v) = d(u,v).
VertexSet interval(const DistanceMatrix& d, Vertex u, Vertex v);

/// Vertices of `a` nearest to `x`, ties kept. Throws on empty `a`.
VertexSet metric_projection(const DistanceMatrix& d, Vertex x, std::span<const Vertex> a);

/// Quasi-median of (u1, u2, u3) built greedily: u1' is the furthest-from-u1
/// vertex of I(u1,u2) ∩ I(u1,u3), then u2' furthest from u2 in
/// I(u2,u1') ∩ I(u2,u3), then u3' furthest from u3 in I(u3,u1') ∩ I(u3,u2').
/// Ties go to the minimum id.
std::array<Vertex, 3> quasi_median(const DistanceMatrix& d, Vertex u1, Vertex u2, Vertex u3);

/// True iff I(u,v) ⊆ s for all u, v in s.
bool is_convex(const DistanceMatrix& d, const VertexSet& s);

/// Vertices at distance <= radius from `center`.
VertexSet ball(const DistanceMatrix& d, Vertex center, Distance radius);

}  // namespace bridged

#endif  // BRIDGED_METRIC_HPP
