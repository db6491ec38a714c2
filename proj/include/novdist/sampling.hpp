#pragma once

#include <cstdint>

#include "novdist/metric.hpp"
#include "novdist/novelty.hpp"
#include "novdist/worlds.hpp"

namespace novdist {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct SamplingConfig {
    std::size_t num_agents = 50;
    std::size_t episodes_per_agent = 100;
    std::uint64_t master_seed = 0;
};

// SplitMix64 output function; used everywhere a derived seed is needed so
// streams are stable across platforms and thread counts.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Exact solution space by depth-first traversal of the action tree, pruning
// at terminal states. Refuses up front when |action_set|^horizon exceeds the
// budget rather than returning a truncated space.
PartitionedSolutionSpace enumerate_solutions(const WorldSpec& spec,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

// The random-agent approximation: each agent runs episodes of uniformly
// random actions; reward-1 action sequences are collected, merged in agent
// order, deduplicated and partitioned. Deterministic given master_seed and
// independent of `jobs`.
PartitionedSolutionSpace sample_solutions(const WorldSpec& spec, const SamplingConfig& cfg,
                                          unsigned jobs = 1);

struct DifficultyEstimate {
    DifficultyReport report;  // difficulty class set
    SamplingConfig config;
    std::string novelty_id;
};

// apply_novelty + sample both spaces + space_distance + classify.
DifficultyEstimate estimate_difficulty(const WorldSpec& pre, const NoveltySpec& nov,
                                       const SamplingConfig& cfg, NormalizationMode mode,
                                       const DifficultyThresholds& thresholds = {},
                                       unsigned jobs = 1);

}  // namespace novdist
