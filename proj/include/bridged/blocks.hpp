#ifndef BRIDGED_BLOCKS_HPP
#define BRIDGED_BLOCKS_HPP

#include <vector>

#include "bridged/graph.hpp"

namespace bridged {

struct Block {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool nontrivial = false;  // contains a triangle
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // ordered by smallest edge
    VertexSet articulation_points;
};

/// 2-connected components (blocks) and cut vertices. An isolated vertex is
/// reported as a block with no edges.
BlockDecomposition blocks(const Graph& g);

}  // namespace bridged

#endif  // BRIDGED_BLOCKS_HPP
