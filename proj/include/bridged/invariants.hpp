#ifndef BRIDGED_INVARIANTS_HPP
#define BRIDGED_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bridged/graph.hpp"
#include "bridged/star_fiber.hpp"

namespace bridged {

struct InvariantReport {
    std::map<std::string, std::size_t> checked;  // property -> number of instances checked
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
    void count(const std::string& property, std::size_t k = 1) { checked[property] += k; }
    void fail(const std::string& property, const std::string& detail);
    void merge(const InvariantReport& other);
};

/// Structural checks on one star partition (local ids of `g`).
InvariantReport check_level(const Graph& g, const DistanceMatrix& d, const LevelGeometry& level);

/// Graph-level checks: triangle-free spheres around every vertex and
/// equilateral quasi-medians on `triples` seeded random triples.
InvariantReport check_metric(const Graph& g, const DistanceMatrix& d, std::size_t triples, std::uint64_t seed);

struct StructureOptions {
    std::size_t max_depth = 64;        // recursion levels to visit (0 = top only)
    std::size_t quasi_median_triples = 200;
    std::uint64_t seed = 1;
};

/// Runs check_metric on g and check_level on every recursion node up to
/// max_depth, following the encoder's recursion. Class violations surface as
/// failures instead of exceptions.
InvariantReport check_structure(const Graph& g, const StructureOptions& options = {});

}  // namespace bridged

#endif  // BRIDGED_INVARIANTS_HPP
