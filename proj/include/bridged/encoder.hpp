#ifndef BRIDGED_ENCODER_HPP
#define BRIDGED_ENCODER_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bridged/graph.hpp"
#include "bridged/labels.hpp"
#include "bridged/star_fiber.hpp"

namespace bridged {

/// One recursion node: the subgraph it works on and its star, in global ids.
struct TraceNode {
    std::uint32_t depth = 0;
    Vertex median = 0;
    std::vector<Vertex> vertices;  // ascending
    // k-neighboring distance in St(m) \ {m} for star-vertex pairs (a < b)
    // with k <= 3; missing pairs are farther apart or disconnected.
    std::map<std::pair<Vertex, Vertex>, Distance> near;
};

struct TraceStep {
    std::uint32_t node;
    Vertex root;  // global id of the fiber root
    FiberRole role;
};

/// Encoder-side ground truth: for every vertex, the fiber it fell into at each level.
struct EncodingTrace {
    std::vector<TraceNode> nodes;
    std::vector<std::vector<TraceStep>> steps;  // per vertex, one per level
};

/// Runs the recursive encoder. The graph must be connected K4-free bridged;
/// violations found on the way throw ClassViolation with global witness ids.
std::vector<VertexLabel> encode_graph(const Graph& g, EncodingTrace* trace = nullptr);

/// encode_graph followed by serialization, tagged with instance_hash(g).
LabelSet encode_label_set(const Graph& g, EncodingTrace* trace = nullptr);

enum class PairClass : std::uint8_t { Same, Separated, AlmostSeparated, OnePC, TwoCC };
const char* to_string(PairClass c);

struct PairTruth {
    PairClass kind = PairClass::Same;
    std::uint32_t level = 0;  // deepest shared level
    std::uint32_t node = 0;
};

/// Classification of (u, v) at their deepest common level, from the trace.
PairTruth classify_pair(const EncodingTrace& trace, Vertex u, Vertex v);

}  // namespace bridged

#endif  // BRIDGED_ENCODER_HPP
