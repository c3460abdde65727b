#ifndef BRIDGED_DECODER_HPP
#define BRIDGED_DECODER_HPP

#include <cstdint>

#include "bridged/labels.hpp"

namespace bridged {

enum class DecodeBranch : std::uint8_t { Same, Default, PanelCone, ConeCone };
const char* to_string(DecodeBranch b);

struct DecodeResult {
    Distance estimate = 0;
    DecodeBranch branch = DecodeBranch::Same;
    std::uint32_t level = 0;
};

/// Distance estimate from two labels of the same encoding run.
DecodeResult decode_detailed(const VertexLabel& a, const VertexLabel& b);
inline Distance decode(const VertexLabel& a, const VertexLabel& b) { return decode_detailed(a, b).estimate; }

/// Panel vertex record vs. cone vertex record whose pair contains the panel's value.
Distance dist_pc(const LevelRecord& panel, const LevelRecord& cone);
/// Two cone records whose pairs share exactly one value.
Distance dist_cc(const LevelRecord& u, const LevelRecord& v);

/// Decodes labels taken from two label sets; throws InstanceMismatch unless
/// both come from the same instance.
Distance decode_between(const LabelSet& a_set, Vertex a, const LabelSet& b_set, Vertex b);

}  // namespace bridged

#endif  // BRIDGED_DECODER_HPP
