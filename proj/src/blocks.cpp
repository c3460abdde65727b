#include "bridged/blocks.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

namespace bridged {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, std::size_t>>;

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    const auto edge_list = g.edges();
    BoostGraph bg(g.vertex_count());
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        boost::add_edge(static_cast<std::size_t>(edge_list[i].first), static_cast<std::size_t>(edge_list[i].second), i,
                        bg);
    }

    std::vector<std::size_t> component(edge_list.size());
    auto edge_index = boost::get(boost::edge_index, bg);
    auto component_map = boost::make_iterator_property_map(component.begin(), edge_index);
    std::vector<std::size_t> cut_vertices;
    auto [count, out] = boost::biconnected_components(bg, component_map, std::back_inserter(cut_vertices));
    (void)out;

    std::vector<std::vector<std::pair<Vertex, Vertex>>> block_edges(count);
    for (auto [it, end] = boost::edges(bg); it != end; ++it) {
        std::size_t idx = edge_index[*it];
        block_edges[component[idx]].push_back(edge_list[idx]);
    }

    BlockDecomposition result;
    for (auto& edges : block_edges) {
        std::sort(edges.begin(), edges.end());
        std::vector<Vertex> members;
        for (auto [u, v] : edges) {
            members.push_back(u);
            members.push_back(v);
        }
        Block block{VertexSet(std::move(members)), std::move(edges), false};
        for (auto [u, v] : block.edges) {
            for (Vertex w : g.neighbors(u)) {
                if (w != v && block.vertices.contains(w) && g.adjacent(v, w)) {
                    block.nontrivial = true;
                    break;
                }
            }
            if (block.nontrivial) break;
        }
        result.blocks.push_back(std::move(block));
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) == 0) {
            result.blocks.push_back(Block{VertexSet({static_cast<Vertex>(v)}), {}, false});
        }
    }
    std::sort(result.blocks.begin(), result.blocks.end(), [](const Block& a, const Block& b) {
        auto key = [](const Block& blk) {
            return blk.edges.empty() ? std::pair{blk.vertices.front(), blk.vertices.front()} : blk.edges.front();
        };
        return key(a) < key(b);
    });

    std::vector<Vertex> cuts(cut_vertices.begin(), cut_vertices.end());
    result.articulation_points = VertexSet(std::move(cuts));
    return result;
}

}  // namespace bridged
