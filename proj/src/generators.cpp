#include "bridged/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bridged/class_check.hpp"
#include "bridged/metric.hpp"

namespace bridged {

namespace {

// A grid patch in local ids together with its straight sides (vertex paths).
struct Patch {
    std::size_t vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> sides;
};

Patch triangle_patch(int k) {
    Patch p;
    // id of (i, j): rows j = 0..k, row j holds k - j + 1 vertices.
    std::vector<int> row_start(static_cast<std::size_t>(k) + 2, 0);
    for (int j = 0; j <= k; ++j) row_start[static_cast<std::size_t>(j) + 1] = row_start[static_cast<std::size_t>(j)] + (k - j + 1);
    auto id = [&](int i, int j) { return static_cast<Vertex>(row_start[static_cast<std::size_t>(j)] + i); };
    p.vertex_count = static_cast<std::size_t>(row_start.back());
    for (int j = 0; j <= k; ++j) {
        for (int i = 0; i + j <= k; ++i) {
            if (i + 1 + j <= k) {
                p.edges.emplace_back(id(i, j), id(i + 1, j));
                p.edges.emplace_back(id(i + 1, j), id(i, j + 1));
            }
            if (i + j + 1 <= k) p.edges.emplace_back(id(i, j), id(i, j + 1));
        }
    }
    std::vector<Vertex> bottom, left, slanted;
    for (int t = 0; t <= k; ++t) {
        bottom.push_back(id(t, 0));
        left.push_back(id(0, t));
        slanted.push_back(id(k - t, t));
    }
    p.sides = {bottom, left, slanted};
    return p;
}

Patch lozenge_patch(int a, int b) {
    Patch p;
    auto id = [b](int i, int j) { return static_cast<Vertex>(i * (b + 1) + j); };
    p.vertex_count = static_cast<std::size_t>((a + 1) * (b + 1));
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            if (i < a) p.edges.emplace_back(id(i, j), id(i + 1, j));
            if (j < b) p.edges.emplace_back(id(i, j), id(i, j + 1));
            if (i < a && j < b) p.edges.emplace_back(id(i + 1, j), id(i, j + 1));
        }
    }
    std::vector<Vertex> s0, s1, s2, s3;
    for (int i = 0; i <= a; ++i) {
        s0.push_back(id(i, 0));
        s2.push_back(id(i, b));
    }
    for (int j = 0; j <= b; ++j) {
        s1.push_back(id(0, j));
        s3.push_back(id(a, j));
    }
    p.sides = {s0, s1, s2, s3};
    return p;
}

Graph to_graph(const Patch& p) { return Graph(p.vertex_count, p.edges); }

// Adjacency-set graph supporting vertex deletion.
Patch burn(const Patch& lozenge, Vertex keep_a, Vertex keep_b, Rng& rng, std::size_t budget) {
    const std::size_t n = lozenge.vertex_count;
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : lozenge.edges) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> alive(n, 1);
    auto removable = [&](Vertex v) {
        const auto& nb = adj[static_cast<std::size_t>(v)];
        if (v == keep_a || v == keep_b || nb.size() != 3) return false;
        std::vector<Vertex> w(nb.begin(), nb.end());
        int links = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) links += adj[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])].count(w[static_cast<std::size_t>(j)]) ? 1 : 0;
        }
        return links == 2;
    };
    for (std::size_t removed = 0; removed < budget; ++removed) {
        std::vector<Vertex> candidates;
        for (std::size_t v = 0; v < n; ++v) {
            if (alive[v] && removable(static_cast<Vertex>(v))) candidates.push_back(static_cast<Vertex>(v));
        }
        if (candidates.empty()) break;
        Vertex victim = candidates[rng.below(candidates.size())];
        for (Vertex w : adj[static_cast<std::size_t>(victim)]) adj[static_cast<std::size_t>(w)].erase(victim);
        adj[static_cast<std::size_t>(victim)].clear();
        alive[static_cast<std::size_t>(victim)] = 0;
    }
    std::vector<Vertex> renumber(n, -1);
    Patch out;
    for (std::size_t v = 0; v < n; ++v) {
        if (alive[v]) renumber[v] = static_cast<Vertex>(out.vertex_count++);
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex w : adj[v]) {
            if (static_cast<Vertex>(v) < w) out.edges.emplace_back(renumber[v], renumber[static_cast<std::size_t>(w)]);
        }
    }
    return out;
}

class Builder {
public:
    std::size_t vertex_count() const { return vertex_count_; }
    std::vector<std::vector<Vertex>>& free_sides() { return free_sides_; }

    // Adds `p`, identifying local vertex i with existing vertex glue[i] when glue[i] >= 0.
    // Side `used_side` of the patch (if >= 0) is not registered as free.
    void attach(const Patch& p, const std::vector<Vertex>& glue, int used_side) {
        std::vector<Vertex> global(p.vertex_count);
        for (std::size_t i = 0; i < p.vertex_count; ++i) {
            global[i] = (!glue.empty() && glue[i] >= 0) ? glue[i] : static_cast<Vertex>(vertex_count_++);
        }
        for (auto [u, v] : p.edges) {
            bool u_old = !glue.empty() && glue[static_cast<std::size_t>(u)] >= 0;
            bool v_old = !glue.empty() && glue[static_cast<std::size_t>(v)] >= 0;
            if (u_old && v_old) continue;
            edges_.emplace_back(global[static_cast<std::size_t>(u)], global[static_cast<std::size_t>(v)]);
        }
        for (std::size_t s = 0; s < p.sides.size(); ++s) {
            if (static_cast<int>(s) == used_side) continue;
            std::vector<Vertex> side;
            for (Vertex v : p.sides[s]) side.push_back(global[static_cast<std::size_t>(v)]);
            free_sides_.push_back(std::move(side));
        }
    }

    void add_pendant_path(Vertex from, int length) {
        Vertex prev = from;
        for (int i = 0; i < length; ++i) {
            Vertex next = static_cast<Vertex>(vertex_count_++);
            edges_.emplace_back(prev, next);
            prev = next;
        }
    }

    Graph graph() const { return Graph(vertex_count_, edges_); }

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> free_sides_;
};

// Glue patch side `side` onto the existing path `target` (same length), in a random direction.
void glue_along_side(Builder& b, const Patch& p, int side, const std::vector<Vertex>& target, Rng& rng) {
    std::vector<Vertex> glue(p.vertex_count, -1);
    const auto& ps = p.sides[static_cast<std::size_t>(side)];
    const bool reversed = rng.below(2) == 1;
    for (std::size_t t = 0; t < ps.size(); ++t) {
        glue[static_cast<std::size_t>(ps[t])] = reversed ? target[target.size() - 1 - t] : target[t];
    }
    b.attach(p, glue, side);
}

void glue_at_vertex(Builder& b, const Patch& p, Vertex at, Rng& rng) {
    std::vector<Vertex> glue(p.vertex_count, -1);
    glue[rng.below(p.vertex_count)] = at;
    b.attach(p, glue, -1);
}

int largest_triangle_within(std::size_t budget) {
    int k = 1;
    while (k < 5 && static_cast<std::size_t>((k + 2) * (k + 3) / 2 - 1) <= budget) ++k;
    return k;
}

Graph build_random(std::size_t n_target, Rng& rng) {
    Builder b;
    b.attach(Patch{1, {}, {}}, {}, -1);
    while (b.vertex_count() < n_target) {
        const std::size_t remaining = n_target - b.vertex_count();
        const auto roll = rng.below(100);
        auto& sides = b.free_sides();
        if (roll < 55 && !sides.empty()) {
            const std::size_t pick = rng.below(sides.size());
            std::vector<Vertex> target = std::move(sides[pick]);
            sides.erase(sides.begin() + static_cast<std::ptrdiff_t>(pick));
            const int len = static_cast<int>(target.size()) - 1;
            if (rng.below(2) == 0) {
                glue_along_side(b, triangle_patch(len), static_cast<int>(rng.below(3)), target, rng);
            } else {
                const int other = static_cast<int>(rng.between(1, 4));
                // sides 0 and 2 have length a, sides 1 and 3 have length b
                const bool along_a = rng.below(2) == 0;
                Patch p = along_a ? lozenge_patch(len, other) : lozenge_patch(other, len);
                int side = static_cast<int>(rng.below(2)) * 2 + (along_a ? 0 : 1);
                glue_along_side(b, p, side, target, rng);
            }
        } else if (roll < 85) {
            const Vertex at = static_cast<Vertex>(rng.below(b.vertex_count()));
            const auto kind = rng.below(3);
            if (kind == 0) {
                glue_at_vertex(b, triangle_patch(static_cast<int>(rng.between(1, largest_triangle_within(remaining)))), at, rng);
            } else if (kind == 1) {
                glue_at_vertex(b, lozenge_patch(static_cast<int>(rng.between(1, 4)), static_cast<int>(rng.between(1, 4))), at,
                               rng);
            } else {
                const int a = static_cast<int>(rng.between(1, 5));
                const int c = static_cast<int>(rng.between(1, 5));
                Patch full = lozenge_patch(a, c);
                Patch burned = burn(full, 0, static_cast<Vertex>(full.vertex_count - 1), rng, rng.below(full.vertex_count));
                glue_at_vertex(b, burned, at, rng);
            }
        } else {
            const Vertex at = static_cast<Vertex>(rng.below(b.vertex_count()));
            b.add_pendant_path(at, static_cast<int>(rng.between(1, static_cast<std::int64_t>(std::min<std::size_t>(3, remaining)))));
        }
    }
    return b.graph();
}

bool in_class(const Graph& g) {
    if (!is_connected(g)) return false;
    return is_k4_free(g).ok && is_bridged(g, all_pairs(g)).ok;
}

constexpr int kMaxAttempts = 32;

}  // namespace

Graph flat_triangle(int side) {
    if (side < 0) throw std::invalid_argument("flat_triangle: side must be >= 0");
    return to_graph(triangle_patch(side));
}

Graph lozenge(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("lozenge: sides must be >= 1");
    return to_graph(lozenge_patch(a, b));
}

Graph burned_lozenge(int a, int b, std::uint64_t seed, std::size_t budget) {
    if (a < 1 || b < 1) throw std::invalid_argument("burned_lozenge: sides must be >= 1");
    Patch full = lozenge_patch(a, b);
    Rng rng(seed);
    return to_graph(burn(full, 0, static_cast<Vertex>(full.vertex_count - 1), rng, budget));
}

Graph glued_triangles(int side, int count, std::uint64_t seed) {
    if (side < 2 || count < 1) throw std::invalid_argument("glued_triangles: need side >= 2 and count >= 1");
    Rng rng(seed);
    const Patch copy = triangle_patch(side);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Builder b;
        b.attach(copy, {}, -1);
        for (int c = 1; c < count; ++c) {
            auto& sides = b.free_sides();
            const std::size_t pick = rng.below(sides.size());
            std::vector<Vertex> target = std::move(sides[pick]);
            sides.erase(sides.begin() + static_cast<std::ptrdiff_t>(pick));
            glue_along_side(b, copy, static_cast<int>(rng.below(3)), target, rng);
        }
        Graph g = b.graph();
        if (in_class(g)) return g;
    }
    throw std::runtime_error("glued_triangles: no valid instance after resampling");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_tree: n must be >= 1");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v));
    return Graph(n, edges);
}

Graph random_instance(std::size_t n_target, std::uint64_t seed) {
    if (n_target == 0) throw std::invalid_argument("random_instance: n_target must be >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Graph g = build_random(n_target, rng);
        if (in_class(g)) return g;
    }
    throw std::runtime_error("random_instance: resampling budget exhausted");
}

}  // namespace bridged
