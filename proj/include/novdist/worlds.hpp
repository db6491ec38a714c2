#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "novdist/metric.hpp"

namespace novdist {

struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

// Small deterministic maze: move N/S/E/W, bumping a wall or the boundary
// stays in place (the action is still consumed), reward 1 on the goal.
struct GridNavParams {
    int width = 0;
    int height = 0;
    std::set<Cell> walls;
    Cell start;
    Cell goal;
};

// Projectile world: each action is one shot (angle index, power index),
// sampled along a closed-form parabola on a fixed time grid. A target is
// destroyed when a sample point falls within its radius, unless a block
// rectangle intercepts the trajectory first. Reward 1 when all targets are
// destroyed before the shots run out.
struct SlingshotParams {
    struct Target {
        double x = 0, y = 0, radius = 0;
        auto operator<=>(const Target&) const = default;
    };
    struct Block {
        double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
        auto operator<=>(const Block&) const = default;
    };
    std::vector<double> angles_deg;
    std::vector<double> powers;
    double gravity = 9.8;
    double time_step = 0.02;
    std::vector<Target> targets;
    std::vector<Block> blocks;
};

enum class WorldKind { GridNav, Slingshot };

struct WorldSpec {
    WorldKind kind = WorldKind::GridNav;
    std::variant<GridNavParams, SlingshotParams> params;
    int horizon = 1;  // max actions per episode; slingshot: number of shots
    ActionMetricSpec action_metric;

    const GridNavParams& grid() const { return std::get<GridNavParams>(params); }
    const SlingshotParams& sling() const { return std::get<SlingshotParams>(params); }
};

WorldSpec make_gridnav(GridNavParams p, int horizon);
WorldSpec make_slingshot(SlingshotParams p, int shots);

// Throws SpecValidation on any malformed spec.
void validate_spec(const WorldSpec& spec);

struct GridNavState {
    Cell pos;
    bool operator==(const GridNavState&) const = default;
};
struct SlingshotState {
    std::vector<bool> targets_alive;
    bool operator==(const SlingshotState&) const = default;
};

struct WorldState {
    std::variant<GridNavState, SlingshotState> body;
    int steps = 0;
    bool terminal = false;
    int reward = 0;
    bool operator==(const WorldState&) const = default;
};

struct StepResult {
    bool terminal = false;
    int reward = 0;
};

struct EpisodeOutcome {
    std::vector<ActionVector> actions;
    int terminal_reward = 0;
    int steps = 0;
};

WorldState reset(const WorldSpec& spec);
StepResult step(const WorldSpec& spec, WorldState& state, const ActionVector& action);

// Global action set in a fixed canonical order; identical at every state.
std::vector<ActionVector> action_set(const WorldSpec& spec);

// Replay an action sequence from reset, stopping at the first terminal
// state (remaining actions are ignored).
EpisodeOutcome run_episode(const WorldSpec& spec, const std::vector<ActionVector>& actions);

}  // namespace novdist
