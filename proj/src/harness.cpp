#include "novdist/harness.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>

#include "novdist/errors.hpp"
#include "novdist/parallel.hpp"

namespace novdist {

namespace {

WorldSpec generate_grid_level(std::uint64_t seed, std::size_t index, const GridLevelOptions& o) {
    // Candidate wall cells: everything except start, goal, anchors, required.
    std::vector<Cell> candidates;
    for (int x = 0; x < o.width; ++x)
        for (int y = 0; y < o.height; ++y) {
            Cell c{x, y};
            if (c == o.start || c == o.goal) continue;
            if (std::find(o.required_walls.begin(), o.required_walls.end(), c) !=
                o.required_walls.end())
                continue;
            if (std::find(o.forbidden_walls.begin(), o.forbidden_walls.end(), c) !=
                o.forbidden_walls.end())
                continue;
            candidates.push_back(c);
        }

    for (int attempt = 0; attempt < o.retries_per_level; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, index, static_cast<std::uint64_t>(attempt)));
        GridNavParams g;
        g.width = o.width;
        g.height = o.height;
        g.start = o.start;
        g.goal = o.goal;
        g.walls.insert(o.required_walls.begin(), o.required_walls.end());

        auto pool = candidates;
        const std::size_t extra =
            pool.empty() ? 0 : rng() % (static_cast<std::size_t>(o.max_extra_walls) + 1);
        for (std::size_t k = 0; k < extra && !pool.empty(); ++k) {
            const std::size_t pick = rng() % pool.size();
            g.walls.insert(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }

        try {
            WorldSpec spec = make_gridnav(std::move(g), o.horizon);
            if (!enumerate_solutions(spec).empty()) return spec;
        } catch (const SpecValidation&) {
            // fall through to the next attempt
        }
    }
    throw GenerationFailed("could not generate a solvable gridnav level within the retry budget");
}

WorldSpec generate_sling_level(std::uint64_t seed, std::size_t index, const SlingLevelOptions& o) {
    for (int attempt = 0; attempt < o.retries_per_level; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, index, 1000 + static_cast<std::uint64_t>(attempt)));
        SlingshotParams s;
        s.angles_deg = o.angles_deg;
        s.powers = o.powers;
        s.gravity = o.gravity;
        s.time_step = o.time_step;

        // Place each target on the flight path of some grid action so the
        // level is solvable by construction; enumeration still verifies.
        const std::size_t n_targets = 1 + rng() % static_cast<std::size_t>(o.max_targets);
        for (std::size_t t = 0; t < n_targets; ++t) {
            const double angle =
                o.angles_deg[rng() % o.angles_deg.size()] * std::numbers::pi / 180.0;
            const double power = o.powers[rng() % o.powers.size()];
            const double t_flight = 2.0 * power * std::sin(angle) / o.gravity;
            const double frac = 0.2 + 0.6 * (static_cast<double>(rng() % 1000) / 1000.0);
            const double tt = frac * t_flight;
            s.targets.push_back({power * std::cos(angle) * tt,
                                 power * std::sin(angle) * tt - 0.5 * o.gravity * tt * tt,
                                 o.target_radius});
        }

        try {
            WorldSpec spec = make_slingshot(std::move(s), o.shots);
            if (!enumerate_solutions(spec).empty()) return spec;
        } catch (const SpecValidation&) {
        }
    }
    throw GenerationFailed("could not generate a solvable slingshot level within the retry budget");
}

// One level, one agent. `seed` already encodes (experiment seed, novelty,
// level); attempt streams are derived from it.
bool run_agent_on_level(const AgentConfig& agent, const WorldSpec& pre, const WorldSpec& post,
                        std::uint64_t seed) {
    const auto actions = action_set(post);

    auto random_attempt = [&](std::uint64_t attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        WorldState state = reset(post);
        while (!state.terminal) step(post, state, actions[rng() % actions.size()]);
        return state.reward == 1;
    };

    switch (agent.kind) {
        case AgentKind::Random: {
            for (std::size_t a = 0; a < agent.attempts; ++a)
                if (random_attempt(a)) return true;
            return false;
        }
        case AgentKind::ReplayAdapt: {
            // Memory comes from the pre-novel world only.
            const auto memory = enumerate_solutions(pre);
            std::size_t used = 0;
            for (const auto& [n, part] : memory.partitions) {
                for (const auto& sol : part) {
                    if (used >= agent.attempts) break;
                    ++used;
                    if (run_episode(post, sol.actions).terminal_reward == 1) return true;
                }
            }
            for (std::size_t a = used; a < agent.attempts; ++a)
                if (random_attempt(a)) return true;
            return false;
        }
        case AgentKind::ReplanBudget: {
            // Breadth-first search through reset/step with a node budget.
            std::deque<std::pair<WorldState, int>> queue;  // state, depth (path not needed)
            queue.emplace_back(reset(post), 0);
            std::size_t expanded = 0;
            while (!queue.empty() && expanded < agent.search_nodes) {
                auto [state, depth] = queue.front();
                queue.pop_front();
                for (const auto& a : actions) {
                    if (expanded++ >= agent.search_nodes) return false;
                    WorldState next = state;
                    auto r = step(post, next, a);
                    if (r.terminal) {
                        if (r.reward == 1) return true;
                    } else {
                        queue.emplace_back(std::move(next), depth + 1);
                    }
                }
            }
            return false;
        }
    }
    return false;
}

struct ApplicableLevel {
    std::size_t index;
    WorldSpec post;
};

}  // namespace

LevelSet generate_levels(WorldKind kind, std::uint64_t seed, std::size_t count,
                         const LevelGenOptions& options) {
    if (count < 1) throw SpecValidation("level count must be at least 1");
    LevelSet set;
    set.seed = seed;
    set.levels.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        set.levels[i] = kind == WorldKind::GridNav ? generate_grid_level(seed, i, options.grid)
                                                   : generate_sling_level(seed, i, options.sling);
    return set;
}

double evaluate_agent(const AgentConfig& agent, const LevelSet& levels, const NoveltySpec* nov,
                      std::uint64_t seed, unsigned jobs) {
    if (levels.levels.empty()) throw SpecValidation("empty level set");

    std::vector<ApplicableLevel> applicable;
    for (std::size_t i = 0; i < levels.levels.size(); ++i) {
        if (!nov) {
            applicable.push_back({i, levels.levels[i]});
            continue;
        }
        try {
            applicable.push_back({i, apply_novelty(levels.levels[i], *nov)});
        } catch (const InvalidNovelty&) {
        } catch (const KindMismatch&) {
        }
    }
    if (applicable.empty()) throw InvalidNovelty("novelty applies to no level in the set");

    std::vector<char> passed(applicable.size(), 0);
    parallel_for(applicable.size(), jobs, [&](std::size_t k) {
        const auto& [idx, post] = applicable[k];
        passed[k] = run_agent_on_level(agent, levels.levels[idx], post, mix_seed(seed, idx));
    });
    std::size_t total = 0;
    for (char p : passed) total += p;
    return static_cast<double>(total) / static_cast<double>(applicable.size());
}

double spearman_rho(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DegenerateRanks("rank lists differ in length");
    if (xs.size() < 3) throw DegenerateRanks("need at least 3 points");

    auto rankify = [](std::span<const double> v) {
        const std::size_t n = v.size();
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> ranks(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
            i = j + 1;
        }
        return ranks;
    };

    const auto rx = rankify(xs);
    const auto ry = rankify(ys);
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) throw DegenerateRanks("all ranks tied in one list");
    return sxy / std::sqrt(sxx * syy);
}

EvalReport run_experiment(const std::vector<NoveltySpec>& suite, const AgentConfig& agent,
                          const LevelSet& levels, const SamplingConfig& sampling,
                          NormalizationMode mode, const DifficultyThresholds& thresholds,
                          std::uint64_t eval_seed, unsigned jobs) {
    if (suite.empty()) throw SpecValidation("novelty suite is empty");
    if (levels.levels.empty()) throw SpecValidation("empty level set");
    const std::size_t n_levels = levels.levels.size();

    EvalReport report;
    report.eval_seed = eval_seed;
    report.sampling = sampling;
    report.mode = mode;
    report.thresholds = thresholds;

    // Pre-novel sampled spaces and pre-novel pass results are shared across
    // all novelties in the suite.
    std::vector<PartitionedSolutionSpace> pre_spaces(n_levels);
    std::vector<char> pre_pass(n_levels, 0);
    parallel_for(n_levels, jobs, [&](std::size_t l) {
        SamplingConfig cfg = sampling;
        cfg.master_seed = mix_seed(sampling.master_seed, l);
        pre_spaces[l] = sample_solutions(levels.levels[l], cfg);
        pre_pass[l] = run_agent_on_level(agent, levels.levels[l], levels.levels[l],
                                         mix_seed(eval_seed, 0, l));
    });

    for (std::size_t ni = 0; ni < suite.size(); ++ni) {
        const auto& nov = suite[ni];
        EvalRow row;
        row.novelty_id = nov.id;
        row.novelty_kind = to_string(nov.kind);

        struct LevelResult {
            bool applicable = false;
            bool has_distance = false;
            double distance = 0.0;
            bool post_pass = false;
        };
        std::vector<LevelResult> results(n_levels);

        parallel_for(n_levels, jobs, [&](std::size_t l) {
            WorldSpec post;
            try {
                post = apply_novelty(levels.levels[l], nov);
            } catch (const InvalidNovelty&) {
                return;
            } catch (const KindMismatch&) {
                return;
            }
            auto& res = results[l];
            res.applicable = true;

            SamplingConfig cfg = sampling;
            cfg.master_seed = mix_seed(sampling.master_seed, l);
            const auto post_space = sample_solutions(post, cfg);
            if (!(pre_spaces[l].empty() && post_space.empty())) {
                res.distance = space_distance(pre_spaces[l], post_space, mode).distance;
                res.has_distance = true;
            }
            res.post_pass =
                run_agent_on_level(agent, levels.levels[l], post, mix_seed(eval_seed, ni + 1, l));
        });

        std::size_t applicable = 0, with_distance = 0, pre_ok = 0, post_ok = 0;
        double dist_sum = 0.0;
        for (std::size_t l = 0; l < n_levels; ++l) {
            if (!results[l].applicable) continue;
            ++applicable;
            pre_ok += pre_pass[l];
            post_ok += results[l].post_pass;
            if (results[l].has_distance) {
                ++with_distance;
                dist_sum += results[l].distance;
            }
        }

        row.levels_used = with_distance;
        row.conclusive = with_distance > 0;
        if (row.conclusive) {
            row.mean_distance = dist_sum / static_cast<double>(with_distance);
            row.difficulty = classify_difficulty(row.mean_distance, thresholds);
        }
        if (applicable > 0) {
            row.pre_pass_rate = static_cast<double>(pre_ok) / static_cast<double>(applicable);
            row.post_pass_rate = static_cast<double>(post_ok) / static_cast<double>(applicable);
        }
        report.rows.push_back(std::move(row));
    }

    // Per-class mean post pass rate over conclusive rows (Table 2 shape).
    std::map<DifficultyClass, std::pair<double, std::size_t>> acc;
    for (const auto& row : report.rows)
        if (row.conclusive) {
            auto& [sum, cnt] = acc[*row.difficulty];
            sum += row.post_pass_rate;
            ++cnt;
        }
    for (const auto& [cls, sc] : acc)
        report.mean_post_pass_by_class[cls] = sc.first / static_cast<double>(sc.second);

    std::vector<double> xs, ys;
    for (const auto& row : report.rows)
        if (row.conclusive) {
            xs.push_back(row.mean_distance);
            ys.push_back(row.pre_pass_rate - row.post_pass_rate);
        }
    try {
        report.spearman = spearman_rho(xs, ys);
    } catch (const DegenerateRanks&) {
        report.spearman = std::nullopt;
    }
    return report;
}

const char* to_string(AgentKind k) {
    switch (k) {
        case AgentKind::Random: return "random";
        case AgentKind::ReplayAdapt: return "replay_adapt";
        case AgentKind::ReplanBudget: return "replan_budget";
    }
    return "?";
}

AgentKind agent_kind_from_string(const std::string& s) {
    if (s == "random") return AgentKind::Random;
    if (s == "replay_adapt") return AgentKind::ReplayAdapt;
    if (s == "replan_budget") return AgentKind::ReplanBudget;
    throw SpecValidation("unknown agent kind: " + s);
}

}  // namespace novdist
