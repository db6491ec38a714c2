#include "novdist/sampling.hpp"

#include <random>

#include "novdist/errors.hpp"
#include "novdist/parallel.hpp"

namespace novdist {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1) + 0xBF58476D1CE4E5B9ULL * (c + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

void dfs(const WorldSpec& spec, const std::vector<ActionVector>& actions, const WorldState& state,
         std::vector<ActionVector>& prefix, std::vector<Solution>& out) {
    for (const auto& a : actions) {
        WorldState next = state;
        auto r = step(spec, next, a);
        prefix.push_back(a);
        if (r.terminal) {
            if (r.reward == 1) out.push_back(Solution{prefix});
        } else {
            dfs(spec, actions, next, prefix, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

PartitionedSolutionSpace enumerate_solutions(const WorldSpec& spec, std::uint64_t budget) {
    validate_spec(spec);
    const auto actions = action_set(spec);

    // Saturating |A|^horizon against the budget.
    std::uint64_t tree = 1;
    for (int i = 0; i < spec.horizon; ++i) {
        if (tree > budget / actions.size()) {
            tree = budget + 1;
            break;
        }
        tree *= actions.size();
    }
    if (tree > budget)
        throw EnumerationBudgetExceeded("action tree exceeds the enumeration budget");

    std::vector<Solution> found;
    std::vector<ActionVector> prefix;
    dfs(spec, actions, reset(spec), prefix, found);
    return partition_space(found, spec.action_metric);
}

PartitionedSolutionSpace sample_solutions(const WorldSpec& spec, const SamplingConfig& cfg,
                                          unsigned jobs) {
    validate_spec(spec);
    if (cfg.num_agents == 0 || cfg.episodes_per_agent == 0)
        throw SpecValidation("sampling needs at least one agent and one episode");
    const auto actions = action_set(spec);

    std::vector<std::vector<Solution>> per_agent(cfg.num_agents);
    parallel_for(cfg.num_agents, jobs, [&](std::size_t agent) {
        std::mt19937_64 rng(mix_seed(cfg.master_seed, agent));
        auto& found = per_agent[agent];
        for (std::size_t ep = 0; ep < cfg.episodes_per_agent; ++ep) {
            WorldState state = reset(spec);
            std::vector<ActionVector> trace;
            while (!state.terminal) {
                const auto& a = actions[rng() % actions.size()];
                trace.push_back(a);
                step(spec, state, a);
            }
            if (state.reward == 1) found.push_back(Solution{std::move(trace)});
        }
    });

    // Merge in agent order; dedup happens in partition_space.
    std::vector<Solution> all;
    for (auto& v : per_agent)
        for (auto& s : v) all.push_back(std::move(s));
    return partition_space(all, spec.action_metric);
}

DifficultyEstimate estimate_difficulty(const WorldSpec& pre, const NoveltySpec& nov,
                                       const SamplingConfig& cfg, NormalizationMode mode,
                                       const DifficultyThresholds& thresholds, unsigned jobs) {
    const WorldSpec post = apply_novelty(pre, nov);
    const auto space_a = sample_solutions(pre, cfg, jobs);
    const auto space_b = sample_solutions(post, cfg, jobs);

    DifficultyEstimate est;
    est.config = cfg;
    est.novelty_id = nov.id;
    est.report = space_distance(space_a, space_b, mode);
    est.report.difficulty = classify_difficulty(est.report.distance, thresholds);
    return est;
}

}  // namespace novdist
