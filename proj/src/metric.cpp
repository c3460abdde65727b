#include "bridged/metric.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bridged {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    if (!g.valid(source)) throw std::invalid_argument("invalid source vertex " + std::to_string(source));
    std::vector<Distance> dist(g.vertex_count(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        Distance next = dist[static_cast<std::size_t>(v)] + 1;
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = next;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix d(n);
    std::vector<Vertex> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto row = d.row(static_cast<Vertex>(s));
        std::fill(row.begin(), row.end(), kUnreachable);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<Vertex>(s);
        row[s] = 0;
        while (head < tail) {
            Vertex v = queue[head++];
            Distance next = row[static_cast<std::size_t>(v)] + 1;
            for (Vertex w : g.neighbors(v)) {
                if (row[static_cast<std::size_t>(w)] == kUnreachable) {
                    row[static_cast<std::size_t>(w)] = next;
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n) {
            auto missing = std::find(row.begin(), row.end(), kUnreachable) - row.begin();
            throw std::invalid_argument("graph is disconnected: no path from " + std::to_string(s) + " to " +
                                        std::to_string(missing));
        }
    }
    return d;
}

VertexSet interval(const DistanceMatrix& d, Vertex u, Vertex v) {
    const Distance duv = d(u, v);
    auto ru = d.row(u);
    auto rv = d.row(v);
    std::vector<Vertex> members;
    for (std::size_t w = 0; w < d.size(); ++w) {
        if (ru[w] + rv[w] == duv) members.push_back(static_cast<Vertex>(w));
    }
    return VertexSet(std::move(members));
}

VertexSet metric_projection(const DistanceMatrix& d, Vertex x, std::span<const Vertex> a) {
    if (a.empty()) throw std::invalid_argument("metric projection onto an empty set");
    auto rx = d.row(x);
    Distance best = std::numeric_limits<Distance>::max();
    for (Vertex y : a) best = std::min(best, rx[static_cast<std::size_t>(y)]);
    std::vector<Vertex> members;
    for (Vertex y : a) {
        if (rx[static_cast<std::size_t>(y)] == best) members.push_back(y);
    }
    return VertexSet(std::move(members));
}

namespace {

// Furthest from `from` among w in I(from, a) ∩ I(from, b); minimum id on ties.
Vertex furthest_in_common(const DistanceMatrix& d, Vertex from, Vertex a, Vertex b) {
    auto rf = d.row(from);
    auto ra = d.row(a);
    auto rb = d.row(b);
    const Distance da = rf[static_cast<std::size_t>(a)];
    const Distance db = rf[static_cast<std::size_t>(b)];
    Vertex best = from;
    Distance best_dist = 0;
    for (std::size_t w = 0; w < d.size(); ++w) {
        if (rf[w] + ra[w] == da && rf[w] + rb[w] == db && rf[w] > best_dist) {
            best = static_cast<Vertex>(w);
            best_dist = rf[w];
        }
    }
    return best;
}

}  // namespace

std::array<Vertex, 3> quasi_median(const DistanceMatrix& d, Vertex u1, Vertex u2, Vertex u3) {
    Vertex q1 = furthest_in_common(d, u1, u2, u3);
    Vertex q2 = furthest_in_common(d, u2, q1, u3);
    Vertex q3 = furthest_in_common(d, u3, q1, q2);
    return {q1, q2, q3};
}

bool is_convex(const DistanceMatrix& d, const VertexSet& s) {
    std::vector<char> inside(d.size(), 0);
    for (Vertex v : s) inside[static_cast<std::size_t>(v)] = 1;
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto ru = d.row(members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto rv = d.row(members[j]);
            const Distance duv = ru[static_cast<std::size_t>(members[j])];
            if (duv <= 1) continue;
            for (std::size_t w = 0; w < d.size(); ++w) {
                if (!inside[w] && ru[w] + rv[w] == duv) return false;
            }
        }
    }
    return true;
}

VertexSet ball(const DistanceMatrix& d, Vertex center, Distance radius) {
    std::vector<Vertex> members;
    auto row = d.row(center);
    for (std::size_t w = 0; w < d.size(); ++w) {
        if (row[w] <= radius) members.push_back(static_cast<Vertex>(w));
    }
    return VertexSet(std::move(members));
}

}  // namespace bridged
