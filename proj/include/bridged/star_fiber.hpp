#ifndef BRIDGED_STAR_FIBER_HPP
#define BRIDGED_STAR_FIBER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridged/graph.hpp"

namespace bridged {

/// Vertex minimizing the sum of distances to all others; minimum id on ties.
Vertex median_vertex(const DistanceMatrix& d);

/**
 * Star of a center m: N[m] plus every apex, i.e. every vertex at distance 2
 * from m with two (adjacent) common neighbors with m.
 */
struct Star {
    struct Apex {
        Vertex vertex;
        Vertex low;   // the two neighbors of the apex in I(apex, m), low < high
        Vertex high;
    };

    Vertex center = 0;
    std::vector<Vertex> neighbors;  // ascending
    std::vector<Apex> apexes;       // ascending by vertex

    bool contains(Vertex v) const;
    /// center, neighbors, apexes, in that order
    std::vector<Vertex> vertices() const;
};

/// Throws ClassViolation if some distance-2 vertex has three common neighbors
/// with m, or two non-adjacent ones.
Star build_star(const Graph& g, const DistanceMatrix& d, Vertex m);

/// Position of a vertex within its star: {} for the center, {i} for the i-th
/// neighbor (1-based, ascending id), {i, j} (i < j) for an apex.
class StarLabel {
public:
    StarLabel() = default;
    explicit StarLabel(std::uint32_t a) : size_(1), values_{a, 0} {}
    StarLabel(std::uint32_t a, std::uint32_t b);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    std::uint32_t operator[](std::size_t i) const { return values_[i]; }
    std::uint32_t min() const { return values_[0]; }
    std::uint32_t max() const { return values_[size_ - 1]; }
    bool contains(std::uint32_t x) const noexcept;

    bool proper_subset_of(const StarLabel& other) const noexcept;
    /// Number of shared values (0, 1 or 2).
    std::size_t intersection_size(const StarLabel& other) const noexcept;
    /// The single shared value; requires intersection_size == 1.
    std::uint32_t common_value(const StarLabel& other) const;

    bool operator==(const StarLabel& other) const noexcept;
    std::string to_string() const;

private:
    std::uint8_t size_ = 0;
    std::array<std::uint32_t, 2> values_{0, 0};
};

/// Star labels of every star vertex, aligned with star.vertices().
std::vector<std::pair<Vertex, StarLabel>> star_labels(const Star& star);

enum class FiberRole : std::uint8_t { Center, Panel, Cone };
const char* to_string(FiberRole role);

struct Fiber {
    Vertex root;
    FiberRole role;
    StarLabel label;
    std::vector<Vertex> members;  // ascending
};

/// Assignment of every vertex to the fiber of a star vertex.
struct FiberPartition {
    std::vector<std::uint32_t> fiber_of;  // per vertex, index into fibers
    std::vector<Fiber> fibers;            // aligned with star.vertices()

    const Fiber& fiber_containing(Vertex v) const { return fibers[fiber_of[static_cast<std::size_t>(v)]]; }
    Vertex root_of(Vertex v) const { return fiber_containing(v).root; }
    /// Fiber rooted at star vertex x; throws std::out_of_range otherwise.
    const Fiber& fiber_rooted_at(Vertex x) const;
};

/// Projection onto N[m]: {x} -> panel F(x); {v, w} -> cone of the apex x ~ v, w
/// one step closer to u. Star vertices land in their own fibers; F(m) = {m}.
/// Throws ClassViolation on a projection of three or more vertices or a
/// missing/misplaced apex.
FiberPartition fiber_partition(const Graph& g, const DistanceMatrix& d, const Star& star);

/// Hop distance between star vertices x and y inside St(m) \ {m};
/// std::nullopt when they are disconnected there.
std::optional<Distance> fiber_neighboring_k(const Graph& g, const Star& star, Vertex x, Vertex y);

/// The two panels 1-neighboring a cone, as (low, high) star neighbors.
std::pair<Vertex, Vertex> cone_panels(const Star& star, Vertex apex);

/**
 * Total boundary of a fiber: its members with a neighbor in another fiber,
 * organised as a tree rooted at the fiber root where each member's parent is
 * its unique neighbor one step closer to the root inside the boundary.
 */
struct TotalBoundaryTree {
    Vertex root = 0;
    std::vector<Vertex> members;  // ascending
    std::vector<std::int32_t> parent;  // member index of parent, -1 for the root
    std::vector<Distance> depth;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Vertex v) const;
    /// Member index of v, or -1.
    std::int32_t index_of(Vertex v) const;
    /// Path length between two members along parent edges.
    Distance tree_distance(Vertex a, Vertex b) const;
};

TotalBoundaryTree total_boundary(const Graph& g, const DistanceMatrix& d, const FiberPartition& partition, Vertex x);

/// Entrance of v into the panel whose boundary tree is `panel_tree`: the unique
/// vertex of the metric projection of v on the panel closest to the panel
/// root. Throws ClassViolation if the projection leaves the boundary, does not
/// induce a tree, or has no unique closest-to-root vertex.
Vertex entrance(const Graph& g, const DistanceMatrix& d, const FiberPartition& partition,
                const TotalBoundaryTree& panel_tree, Vertex v);

/// Exits of u on the boundary tree of its own fiber: (u, u) when u is on the
/// tree, else the deepest vertices of the subtree I(u, root) ∩ tree (at most
/// two; equal when the subtree is a single branch), in ascending id order.
/// Throws ClassViolation if the subtree is not closed under parents or has
/// more than two leaves.
std::pair<Vertex, Vertex> exits(const DistanceMatrix& d, const TotalBoundaryTree& tree, Vertex u);

/// Everything computed for one star partition of a graph.
struct LevelGeometry {
    Vertex median = 0;
    Star star;
    FiberPartition partition;
    std::vector<TotalBoundaryTree> boundaries;  // aligned with partition.fibers; empty tree for the center
};

LevelGeometry analyze_level(const Graph& g, const DistanceMatrix& d);

}  // namespace bridged

#endif  // BRIDGED_STAR_FIBER_HPP
