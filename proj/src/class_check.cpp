#include "bridged/class_check.hpp"

#include <algorithm>

#include "bridged/metric.hpp"

namespace bridged {

namespace {

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::vector<Vertex> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

ClassVerdict fail(std::string reason, std::vector<Vertex> witness) {
    return {false, std::move(reason), std::move(witness)};
}

ClassVerdict find_induced_c4(const Graph& g, const DistanceMatrix& d) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Vertex> stamp(g.vertex_count(), -1);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex c : g.neighbors(b)) {
                if (c <= a || d(a, c) != 2 || stamp[static_cast<std::size_t>(c)] == a) continue;
                stamp[static_cast<std::size_t>(c)] = a;
                auto common = common_neighbors(g, a, c);
                for (std::size_t i = 0; i < common.size(); ++i) {
                    for (std::size_t j = i + 1; j < common.size(); ++j) {
                        if (!g.adjacent(common[i], common[j])) {
                            return fail("induced_c4", {a, common[i], c, common[j]});
                        }
                    }
                }
            }
        }
    }
    return {};
}

ClassVerdict find_induced_c5(const Graph& g, const DistanceMatrix& d) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    const auto edges = g.edges();
    for (Vertex u = 0; u < n; ++u) {
        auto ru = d.row(u);
        for (auto [b, c] : edges) {
            if (ru[static_cast<std::size_t>(b)] != 2 || ru[static_cast<std::size_t>(c)] != 2) continue;
            auto ub = common_neighbors(g, u, b);
            auto uc = common_neighbors(g, u, c);
            for (Vertex a : ub) {
                if (g.adjacent(a, c)) continue;
                for (Vertex e : uc) {
                    if (g.adjacent(e, b) || g.adjacent(a, e)) continue;
                    return fail("induced_c5", {u, a, b, c, e});
                }
            }
        }
    }
    return {};
}

bool has_common_neighbor_at(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w, Distance level) {
    auto nv = g.neighbors(v);
    auto nw = g.neighbors(w);
    auto it = nv.begin();
    auto jt = nw.begin();
    while (it != nv.end() && jt != nw.end()) {
        if (*it < *jt) {
            ++it;
        } else if (*jt < *it) {
            ++jt;
        } else {
            if (d(u, *it) == level) return true;
            ++it;
            ++jt;
        }
    }
    return false;
}

ClassVerdict check_triangle_condition(const Graph& g, const DistanceMatrix& d) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    const auto edges = g.edges();
    for (Vertex u = 0; u < n; ++u) {
        auto ru = d.row(u);
        for (auto [v, w] : edges) {
            const Distance k = ru[static_cast<std::size_t>(v)];
            if (k == 0 || ru[static_cast<std::size_t>(w)] != k) continue;
            if (!has_common_neighbor_at(g, d, u, v, w, k - 1)) return fail("triangle", {u, v, w});
        }
    }
    return {};
}

ClassVerdict check_quadrangle_condition(const Graph& g, const DistanceMatrix& d) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Vertex> down;
    for (Vertex u = 0; u < n; ++u) {
        auto ru = d.row(u);
        for (Vertex z = 0; z < n; ++z) {
            const Distance kz = ru[static_cast<std::size_t>(z)];
            if (kz < 2) continue;
            down.clear();
            for (Vertex y : g.neighbors(z)) {
                if (ru[static_cast<std::size_t>(y)] == kz - 1) down.push_back(y);
            }
            for (std::size_t i = 0; i < down.size(); ++i) {
                for (std::size_t j = i + 1; j < down.size(); ++j) {
                    if (!has_common_neighbor_at(g, d, u, down[i], down[j], kz - 2)) {
                        return fail("quadrangle", {u, down[i], down[j], z});
                    }
                }
            }
        }
    }
    return {};
}

}  // namespace

ClassVerdict is_k4_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto common = common_neighbors(g, u, v);
        for (std::size_t i = 0; i < common.size(); ++i) {
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                if (g.adjacent(common[i], common[j])) {
                    std::vector<Vertex> clique{u, v, common[i], common[j]};
                    std::sort(clique.begin(), clique.end());
                    return fail("k4", std::move(clique));
                }
            }
        }
    }
    return {};
}

ClassVerdict is_bridged(const Graph& g, const DistanceMatrix& d) {
    if (auto r = find_induced_c4(g, d); !r.ok) return r;
    if (auto r = find_induced_c5(g, d); !r.ok) return r;
    if (auto r = check_triangle_condition(g, d); !r.ok) return r;
    if (auto r = check_quadrangle_condition(g, d); !r.ok) return r;
    return {};
}

ClassVerdict is_bridged(const Graph& g) {
    if (!is_connected(g)) {
        auto dist = bfs_distances(g, 0);
        auto missing = std::find(dist.begin(), dist.end(), kUnreachable) - dist.begin();
        return fail("disconnected", {0, static_cast<Vertex>(missing)});
    }
    return is_bridged(g, all_pairs(g));
}

bool spheres_triangle_free(const Graph& g, const DistanceMatrix& d, Vertex u) {
    auto ru = d.row(u);
    for (auto [a, b] : g.edges()) {
        const Distance k = ru[static_cast<std::size_t>(a)];
        if (k == 0 || ru[static_cast<std::size_t>(b)] != k) continue;
        for (Vertex c : common_neighbors(g, a, b)) {
            if (ru[static_cast<std::size_t>(c)] == k) return false;
        }
    }
    return true;
}

void require_k4_free_bridged(const Graph& g, const DistanceMatrix& d) {
    if (auto r = is_k4_free(g); !r.ok) throw ClassViolation("graph contains a 4-clique", r.witness);
    if (auto r = is_bridged(g, d); !r.ok) throw ClassViolation("graph is not bridged (" + r.reason + ")", r.witness);
}

}  // namespace bridged
