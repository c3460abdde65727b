#ifndef BRIDGED_VERIFY_HPP
#define BRIDGED_VERIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bridged/decoder.hpp"
#include "bridged/encoder.hpp"
#include "bridged/graph.hpp"
#include "bridged/labels.hpp"

namespace bridged {

inline constexpr std::size_t kAllPairsCap = 2000;

struct VerifyOptions {
    std::size_t sample = 0;  // 0: every ordered pair (needs n <= all_pairs_cap)
    std::size_t all_pairs_cap = kAllPairsCap;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: BRIDGED_THREADS or 1
};

struct RatioStats {
    std::size_t pairs = 0;
    double min_ratio = 0;
    double max_ratio = 0;
    double sum_ratio = 0;
    void add(double ratio);
    void merge(const RatioStats& o);
    double mean() const { return pairs ? sum_ratio / static_cast<double>(pairs) : 0.0; }
};

struct PairFinding {
    Vertex u, v;
    Distance exact, estimate;
    std::string what;
};

struct VerifyReport {
    std::size_t vertices = 0;
    std::uint64_t instance_hash = 0;
    bool sampled = false;
    RatioStats overall;
    // buckets: <1, =1, (1,1.5], (1.5,2], (2,3], (3,4], >4
    std::array<std::size_t, 7> histogram{};
    std::map<std::string, RatioStats> by_class;   // encoder ground truth
    std::map<std::string, RatioStats> by_branch;  // decoder branch
    std::size_t recursed_pairs = 0;               // resolved below the top level
    std::vector<PairFinding> violations;          // outside [1, 4]
    std::vector<PairFinding> refinement;          // separated != exact, almost separated > 2x
    std::vector<PairFinding> soundness;           // branch disagrees with ground truth
    std::vector<std::string> integrity;           // stored labels differ from a fresh encoding

    bool ok() const noexcept { return violations.empty() && refinement.empty() && soundness.empty() && integrity.empty(); }
};

static constexpr const char* kHistogramBuckets[7] = {"<1", "1", "(1,1.5]", "(1.5,2]", "(2,3]", "(3,4]", ">4"};

/// Threads for pair checks: BRIDGED_THREADS if set and positive, else 1.
unsigned default_thread_count();

/// Checks every decoded estimate against BFS distances. Throws
/// InstanceMismatch when the labels were made for another graph, and
/// std::invalid_argument when n exceeds the all-pairs cap without sampling.
VerifyReport verify_labels(const Graph& g, const LabelSet& labels, const VerifyOptions& options = {});

}  // namespace bridged

#endif  // BRIDGED_VERIFY_HPP
