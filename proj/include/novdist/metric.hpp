#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace novdist {

// One action, as a point in the environment's action coordinates.
using ActionVector = std::vector<double>;

enum class MetricKind { Euclidean, Discrete };

// How to measure the distance between two actions, and the diameter max_a
// that normalizes per-solution distances into [0, 1].
struct ActionMetricSpec {
    MetricKind kind = MetricKind::Discrete;
    std::vector<std::pair<double, double>> bounds;  // euclidean only, one (lo, hi) per dimension
    double max_a = 1.0;

    static ActionMetricSpec discrete();
    static ActionMetricSpec euclidean(std::vector<std::pair<double, double>> bounds);

    // 0/1 for discrete, L2 norm for euclidean. Validates finiteness and dimension.
    double action_distance(const ActionVector& a, const ActionVector& b) const;
    void validate_action(const ActionVector& a) const;
    bool compatible_with(const ActionMetricSpec& other) const;
};

// A finite action sequence that reached a reward-1 terminal state.
struct Solution {
    std::vector<ActionVector> actions;

    std::size_t length() const { return actions.size(); }
    bool operator==(const Solution&) const = default;
};

// Lexicographic order on flattened components; shorter prefix first.
bool canonical_less(const Solution& a, const Solution& b);

// Solutions grouped by length, deduplicated, each partition canonically sorted.
struct PartitionedSolutionSpace {
    std::map<std::size_t, std::vector<Solution>> partitions;
    std::size_t total_size = 0;
    ActionMetricSpec metric;

    bool empty() const { return total_size == 0; }
};

// The printed equations divide by max(|P_A|, |P_B|) in both the per-partition
// step and the final sum. Literal keeps both divisions; Single applies one.
enum class NormalizationMode { Literal, Single };

enum class DifficultyClass { Easy, Medium, Hard };

struct DifficultyThresholds {
    double easy_max = 0.0;
    double medium_max = 0.3;
};

struct PartitionBreakdown {
    std::size_t length = 0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    double matched_sum = 0.0;
    double term = 0.0;  // ((size_a - size_b) + matched_sum) / max(|P_A|, |P_B|)
};

struct DifficultyReport {
    double distance = 0.0;
    std::optional<DifficultyClass> difficulty;
    std::vector<PartitionBreakdown> per_partition;
    NormalizationMode mode = NormalizationMode::Literal;
    std::size_t total_a = 0;
    std::size_t total_b = 0;
};

// Mean per-position action distance, normalized by max_a. Both solutions must
// have the same length and consistent dimensions. Result in [0, 1].
double solution_distance(const Solution& a, const Solution& b, const ActionMetricSpec& metric);

// Deduplicate, group by length, sort canonically.
PartitionedSolutionSpace partition_space(const std::vector<Solution>& solutions,
                                         const ActionMetricSpec& metric);

// One partition's contribution: matched_sum is the sum of nearest-neighbor
// solution distances from the smaller side into the larger (ties: lowest
// canonical index; equal sizes: the canonically smaller list is the source,
// which keeps matched_sum symmetric). Returns (partition_term, matched_sum).
// The size term is signed.
std::pair<double, double> partition_distance(const std::vector<Solution>& a_n,
                                             const std::vector<Solution>& b_n,
                                             std::pair<std::size_t, std::size_t> totals,
                                             const ActionMetricSpec& metric);

// Distance between two partitioned spaces over the union of lengths present
// in either. Difficulty class is left unset.
DifficultyReport space_distance(const PartitionedSolutionSpace& a,
                                const PartitionedSolutionSpace& b,
                                NormalizationMode mode);

DifficultyClass classify_difficulty(double distance, const DifficultyThresholds& thresholds = {});

const char* to_string(DifficultyClass c);
const char* to_string(NormalizationMode m);
const char* to_string(MetricKind k);

}  // namespace novdist
