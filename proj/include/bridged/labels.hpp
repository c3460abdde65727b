#ifndef BRIDGED_LABELS_HPP
#define BRIDGED_LABELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridged/graph.hpp"
#include "bridged/star_fiber.hpp"
#include "bridged/tree_labels.hpp"

namespace bridged {

/// Tree label of an exit or entrance plus the graph distance to it.
struct SideRecord {
    TreeLabel tree;
    Distance dist = 0;
    bool operator==(const SideRecord&) const = default;
};

struct LevelRecord {
    Vertex median = 0;  // global id
    Distance dist = 0;  // to the median, inside this level's subgraph
    StarLabel star;
    // Panels: the two exits. Cones: entrances on the panels named by the
    // smaller (left) and larger (right) value of the star label. Absent for m.
    std::optional<SideRecord> left;
    std::optional<SideRecord> right;
    bool operator==(const LevelRecord&) const = default;
};

struct VertexLabel {
    Vertex id = 0;
    std::vector<LevelRecord> levels;
    bool operator==(const VertexLabel&) const = default;
};

/*
 * Byte layout, all integers unsigned LEB128 (7 bits per byte, low group
 * first, high bit = continuation):
 *
 *   id, level count, then per level:
 *     median, dist, |star|, star values...,
 *     if |star| > 0: left, right, each as  entry count, (separator, dist)..., dist
 */
std::vector<std::uint8_t> serialize(const VertexLabel& label);
/// Throws ParseError whose position is the byte offset of the failure.
VertexLabel deserialize(std::span<const std::uint8_t> bytes);

std::string base64_encode(std::span<const std::uint8_t> bytes);
/// Throws ParseError (character offset) on malformed input.
std::vector<std::uint8_t> base64_decode(const std::string& text);

/// Serialized labels of one instance, indexed by vertex id.
struct LabelSet {
    std::uint64_t instance_hash = 0;
    std::vector<std::vector<std::uint8_t>> labels;

    std::size_t size() const noexcept { return labels.size(); }
    VertexLabel label(Vertex v) const { return deserialize(labels.at(static_cast<std::size_t>(v))); }
};

/// Raised when labels or files from different instances are combined.
class InstanceMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File: "#bridged-labels v1 n=<n> hash=<16 hex>" then one "id<TAB>base64" line
// per vertex in id order. ParseError positions are 1-based line numbers.
void write_label_file(const std::string& path, const LabelSet& set);
LabelSet read_label_file(const std::string& path);
void write_labels(std::ostream& out, const LabelSet& set);
LabelSet read_labels(std::istream& in);

}  // namespace bridged

#endif  // BRIDGED_LABELS_HPP
