#include "bridged/tree_labels.hpp"

#include <algorithm>

namespace bridged {

std::vector<TreeLabel> tree_encode(std::span<const std::int32_t> parent) {
    const std::size_t s = parent.size();
    std::vector<std::vector<std::uint32_t>> adj(s);
    for (std::size_t i = 0; i < s; ++i) {
        if (parent[i] < 0) continue;
        const auto p = static_cast<std::uint32_t>(parent[i]);
        adj[i].push_back(p);
        adj[p].push_back(static_cast<std::uint32_t>(i));
    }

    std::vector<TreeLabel> labels(s);
    std::vector<char> removed(s, 0);
    std::vector<std::uint32_t> order, from, subtree(s, 0);
    std::vector<Distance> dist(s, 0);
    std::vector<std::uint32_t> pending;
    for (std::uint32_t i = 0; i < s; ++i) {
        if (parent[i] < 0) pending.push_back(i);
    }

    while (!pending.empty()) {
        const std::uint32_t start = pending.back();
        pending.pop_back();

        // component in BFS order, with BFS parents
        order.assign(1, start);
        from.assign(1, start);
        for (std::size_t h = 0; h < order.size(); ++h) {
            for (std::uint32_t w : adj[order[h]]) {
                if (removed[w] || w == from[h]) continue;
                order.push_back(w);
                from.push_back(order[h]);
            }
        }
        const std::size_t total = order.size();
        for (std::size_t h = total; h-- > 0;) {
            subtree[order[h]] = 1;
        }
        for (std::size_t h = total; h-- > 1;) subtree[from[h]] += subtree[order[h]];

        std::uint32_t centroid = static_cast<std::uint32_t>(s);
        for (std::size_t h = 0; h < total; ++h) {
            const std::uint32_t v = order[h];
            std::size_t heaviest = total - subtree[v];
            for (std::uint32_t w : adj[v]) {
                if (removed[w] || (h > 0 && w == from[h])) continue;
                heaviest = std::max<std::size_t>(heaviest, subtree[w]);
            }
            if (heaviest * 2 <= total && v < centroid) centroid = v;
        }

        order.assign(1, centroid);
        dist[centroid] = 0;
        from.assign(1, centroid);
        for (std::size_t h = 0; h < order.size(); ++h) {
            const std::uint32_t v = order[h];
            labels[v].push_back({centroid, dist[v]});
            for (std::uint32_t w : adj[v]) {
                if (removed[w] || w == from[h]) continue;
                dist[w] = dist[v] + 1;
                order.push_back(w);
                from.push_back(v);
            }
        }
        removed[centroid] = 1;
        for (std::uint32_t w : adj[centroid]) {
            if (!removed[w]) pending.push_back(w);
        }
    }
    return labels;
}

std::vector<TreeLabel> tree_encode(const TotalBoundaryTree& tree) { return tree_encode(tree.parent); }

Distance tree_decode(const TreeLabel& a, const TreeLabel& b) {
    Distance best = kUnreachable;
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common && a[i].separator == b[i].separator; ++i) {
        const Distance via = a[i].dist + b[i].dist;
        if (best == kUnreachable || via < best) best = via;
    }
    return best;
}

}  // namespace bridged
