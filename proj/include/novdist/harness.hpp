#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novdist/sampling.hpp"

namespace novdist {

struct GridLevelOptions {
    int width = 4;
    int height = 4;
    int horizon = 6;
    Cell start{0, 0};
    Cell goal{3, 3};
    std::vector<Cell> required_walls;   // present in every level
    std::vector<Cell> forbidden_walls;  // never walled (novelty anchor cells)
    int max_extra_walls = 3;
    int retries_per_level = 200;
};

struct SlingLevelOptions {
    std::vector<double> angles_deg = {15, 30, 45, 60, 75};
    std::vector<double> powers = {4, 7, 10};
    double gravity = 9.8;
    double time_step = 0.02;
    int shots = 2;
    int max_targets = 2;
    double target_radius = 0.3;
    int retries_per_level = 200;
};

struct LevelGenOptions {
    GridLevelOptions grid;
    SlingLevelOptions sling;
};

struct LevelSet {
    std::vector<WorldSpec> levels;
    std::uint64_t seed = 0;
};

// Seeded procedural levels, each verified solvable by exact enumeration.
LevelSet generate_levels(WorldKind kind, std::uint64_t seed, std::size_t count,
                         const LevelGenOptions& options = {});

enum class AgentKind { Random, ReplayAdapt, ReplanBudget };

struct AgentConfig {
    AgentKind kind = AgentKind::ReplayAdapt;
    std::size_t attempts = 10;      // per level
    std::size_t search_nodes = 10000;  // replan_budget only
};

// Fraction of levels passed within the attempt budget. When `nov` is given it
// is applied to every level; replay_adapt always builds its solution memory
// from the pre-novel level. Levels the novelty cannot be applied to are
// excluded from the rate.
double evaluate_agent(const AgentConfig& agent, const LevelSet& levels, const NoveltySpec* nov,
                      std::uint64_t seed, unsigned jobs = 1);

// Spearman rank correlation with average ranks for ties. Throws
// DegenerateRanks for length mismatch, fewer than 3 points, or an all-tied
// list.
double spearman_rho(std::span<const double> xs, std::span<const double> ys);

struct EvalRow {
    std::string novelty_id;
    std::string novelty_kind;
    bool conclusive = false;
    double mean_distance = 0.0;
    std::optional<DifficultyClass> difficulty;
    double pre_pass_rate = 0.0;
    double post_pass_rate = 0.0;
    std::size_t levels_used = 0;  // levels the novelty applied to and produced a distance

    double pass_pct_diff() const { return (post_pass_rate - pre_pass_rate) * 100.0; }
};

struct EvalReport {
    std::vector<EvalRow> rows;
    std::map<DifficultyClass, double> mean_post_pass_by_class;
    std::optional<double> spearman;  // distance vs (pre - post) pass rate
    std::uint64_t eval_seed = 0;
    SamplingConfig sampling;
    NormalizationMode mode = NormalizationMode::Literal;
    DifficultyThresholds thresholds;
};

// The full protocol: per novelty, sampled distance averaged over level pairs,
// difficulty class, and pre/post agent pass rates. A novelty that fails on
// every level yields an inconclusive row instead of aborting the suite.
EvalReport run_experiment(const std::vector<NoveltySpec>& suite, const AgentConfig& agent,
                          const LevelSet& levels, const SamplingConfig& sampling,
                          NormalizationMode mode, const DifficultyThresholds& thresholds,
                          std::uint64_t eval_seed, unsigned jobs = 1);

const char* to_string(AgentKind k);
AgentKind agent_kind_from_string(const std::string& s);

}  // namespace novdist
