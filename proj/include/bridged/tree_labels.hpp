#ifndef BRIDGED_TREE_LABELS_HPP
#define BRIDGED_TREE_LABELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bridged/graph.hpp"
#include "bridged/star_fiber.hpp"

namespace bridged {

struct TreeEntry {
    std::uint32_t separator;  // index of the centroid among the tree's nodes
    Distance dist;
    bool operator==(const TreeEntry&) const = default;
};

/// Exact tree distance label: one entry per centroid-decomposition level,
/// outermost centroid first.
using TreeLabel = std::vector<TreeEntry>;

/// Labels for a rooted tree given by parent indices (-1 for the root),
/// aligned with `parent`. Centroid ties go to the smaller index.
std::vector<TreeLabel> tree_encode(std::span<const std::int32_t> parent);

/// Same, aligned with tree.members.
std::vector<TreeLabel> tree_encode(const TotalBoundaryTree& tree);

/// Minimum of d(a, s) + d(s, b) over the shared separators. Labels must come
/// from one tree_encode call; returns kUnreachable when they share none.
Distance tree_decode(const TreeLabel& a, const TreeLabel& b);

}  // namespace bridged

#endif  // BRIDGED_TREE_LABELS_HPP
