#ifndef BRIDGED_CLASS_CHECK_HPP
#define BRIDGED_CLASS_CHECK_HPP

#include <string>
#include <vector>

#include "bridged/graph.hpp"

namespace bridged {

/// Outcome of a class test. On failure `witness` is a concrete certificate
/// whose meaning depends on `reason`:
///   "k4"             four pairwise adjacent vertices
///   "induced_c4"     cycle a-b-c-d in order, no chords
///   "induced_c5"     cycle a-b-c-d-e in order, no chords
///   "triangle"       (u, v, w): v~w, d(u,v)=d(u,w)=k>0, no common neighbor of v,w at k-1
///   "quadrangle"     (u, v, w, z): d(u,v)=d(u,w)=k, d(u,z)=k+1, v,w~z, no common neighbor at k-1
///   "disconnected"   two vertices in different components
struct ClassVerdict {
    bool ok = true;
    std::string reason;
    std::vector<Vertex> witness;
};

ClassVerdict is_k4_free(const Graph& g);

/// Weakly modular (triangle and quadrangle conditions) with no induced C4 or C5.
ClassVerdict is_bridged(const Graph& g, const DistanceMatrix& d);

/// Convenience wrapper computing the distance matrix; rejects disconnected graphs.
ClassVerdict is_bridged(const Graph& g);

/// True iff no sphere S_k(u), k >= 1, contains a triangle.
bool spheres_triangle_free(const Graph& g, const DistanceMatrix& d, Vertex u);

/// Both checks; throws ClassViolation with the witness on failure.
void require_k4_free_bridged(const Graph& g, const DistanceMatrix& d);

}  // namespace bridged

#endif  // BRIDGED_CLASS_CHECK_HPP
