#ifndef BRIDGED_GENERATORS_HPP
#define BRIDGED_GENERATORS_HPP

#include <cstdint>
#include <limits>
#include <random>

#include "bridged/graph.hpp"

namespace bridged {

/**
 * Seeded generator with a fully specified output stream: raw draws are
 * std::mt19937_64 (fixed by the C++ standard), and bounded draws use
 * rejection on the low range so that `below(n)` returns r % n for the first
 * raw r >= (2^64 - n) % n. Any language with MT19937-64 reproduces it.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Triangular-grid triangle of side k. Vertex (i, j), i + j <= k, gets id
/// row-major by j then i; corners are 0, k and n - 1.
Graph flat_triangle(int side);

/// Triangular-grid parallelogram with sides a and b. Vertex (i, j) gets id
/// i * (b + 1) + j; the corners at distance a + b are 0 and n - 1.
Graph lozenge(int a, int b);

inline constexpr std::size_t kUnlimitedRemovals = std::numeric_limits<std::size_t>::max();

/// lozenge(a, b) with up to `budget` removals of a randomly chosen degree-3
/// vertex whose neighbors induce a path (corners 0 and n - 1 are kept).
/// Surviving vertices are renumbered in their original order.
Graph burned_lozenge(int a, int b, std::uint64_t seed, std::size_t budget = kUnlimitedRemovals);

/// `count` copies of flat_triangle(side) glued along whole sides following a
/// random tree of copies; each side is used for at most one gluing.
Graph glued_triangles(int side, int count, std::uint64_t seed);

/// Uniform random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Connected K4-free bridged graph with about n_target vertices, built by
/// gluing small grid patches along free straight sides or single vertices and
/// attaching short pendant paths. Verified with the class checks; resampled on
/// failure.
Graph random_instance(std::size_t n_target, std::uint64_t seed);

}  // namespace bridged

#endif  // BRIDGED_GENERATORS_HPP
