#include "bridged/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "bridged/graph_io.hpp"

namespace bridged {

namespace {

const SideRecord& side_for(const LevelRecord& rec, std::uint32_t panel_value) {
    if (!rec.left || !rec.right || rec.star.size() != 2 || !rec.star.contains(panel_value)) {
        throw std::logic_error("cone record has no side for panel " + std::to_string(panel_value));
    }
    return panel_value == rec.star.min() ? *rec.left : *rec.right;
}

}  // namespace

const char* to_string(DecodeBranch b) {
    switch (b) {
        case DecodeBranch::Same: return "same";
        case DecodeBranch::Default: return "default";
        case DecodeBranch::PanelCone: return "pc";
        case DecodeBranch::ConeCone: return "cc";
    }
    return "?";
}

Distance dist_pc(const LevelRecord& panel, const LevelRecord& cone) {
    if (panel.star.size() != 1 || !panel.left || !panel.right) throw std::logic_error("dist_pc: not a panel record");
    const SideRecord& in = side_for(cone, panel.star.min());
    const Distance via1 = tree_decode(in.tree, panel.left->tree) + panel.left->dist;
    const Distance via2 = tree_decode(in.tree, panel.right->tree) + panel.right->dist;
    return in.dist + std::min(via1, via2);
}

Distance dist_cc(const LevelRecord& u, const LevelRecord& v) {
    if (u.star.size() != 2 || v.star.size() != 2 || u.star.intersection_size(v.star) != 1) {
        throw std::logic_error("dist_cc: cone pairs must share exactly one value");
    }
    const std::uint32_t w = u.star.common_value(v.star);
    const SideRecord& su = side_for(u, w);
    const SideRecord& sv = side_for(v, w);
    return su.dist + tree_decode(su.tree, sv.tree) + sv.dist;
}

DecodeResult decode_detailed(const VertexLabel& a, const VertexLabel& b) {
    if (a.id == b.id) return {};
    const std::size_t common = std::min(a.levels.size(), b.levels.size());
    if (common == 0 || a.levels[0].median != b.levels[0].median) {
        throw std::invalid_argument("labels share no level");
    }
    std::size_t i = 0;
    while (i + 1 < common && a.levels[i + 1].median == b.levels[i + 1].median) ++i;

    const LevelRecord& ra = a.levels[i];
    const LevelRecord& rb = b.levels[i];
    DecodeResult r;
    r.level = static_cast<std::uint32_t>(i);
    if (ra.star.size() == 1 && rb.star.size() == 2 && rb.star.contains(ra.star.min())) {
        r.branch = DecodeBranch::PanelCone;
        r.estimate = dist_pc(ra, rb);
    } else if (rb.star.size() == 1 && ra.star.size() == 2 && ra.star.contains(rb.star.min())) {
        r.branch = DecodeBranch::PanelCone;
        r.estimate = dist_pc(rb, ra);
    } else if (ra.star.size() == 2 && rb.star.size() == 2 && ra.star.intersection_size(rb.star) == 1) {
        r.branch = DecodeBranch::ConeCone;
        r.estimate = dist_cc(ra, rb);
    } else {
        r.branch = DecodeBranch::Default;
        r.estimate = ra.dist + rb.dist;
    }
    return r;
}

Distance decode_between(const LabelSet& a_set, Vertex a, const LabelSet& b_set, Vertex b) {
    if (a_set.instance_hash != b_set.instance_hash) {
        throw InstanceMismatch("labels come from different instances (" + hash_hex(a_set.instance_hash) + " vs " +
                               hash_hex(b_set.instance_hash) + ")");
    }
    return decode(a_set.label(a), b_set.label(b));
}

}  // namespace bridged
