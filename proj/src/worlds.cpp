#include "novdist/worlds.hpp"

#include <cmath>
#include <numbers>

#include "novdist/errors.hpp"

namespace novdist {

namespace {

bool in_bounds(const GridNavParams& g, Cell c) {
    return c.x >= 0 && c.x < g.width && c.y >= 0 && c.y < g.height;
}

// Canonical gridnav action order: N, S, E, W.
const std::vector<ActionVector> kGridActions = {
    {0.0, 1.0},   // N
    {0.0, -1.0},  // S
    {1.0, 0.0},   // E
    {-1.0, 0.0},  // W
};

double grid_coord(std::size_t index, std::size_t count) {
    return count > 1 ? static_cast<double>(index) / static_cast<double>(count - 1) : 0.0;
}

}  // namespace

WorldSpec make_gridnav(GridNavParams p, int horizon) {
    WorldSpec spec;
    spec.kind = WorldKind::GridNav;
    spec.params = std::move(p);
    spec.horizon = horizon;
    spec.action_metric = ActionMetricSpec::discrete();
    validate_spec(spec);
    return spec;
}

WorldSpec make_slingshot(SlingshotParams p, int shots) {
    WorldSpec spec;
    spec.kind = WorldKind::Slingshot;
    spec.params = std::move(p);
    spec.horizon = shots;
    spec.action_metric = ActionMetricSpec::euclidean({{0.0, 1.0}, {0.0, 1.0}});
    validate_spec(spec);
    return spec;
}

void validate_spec(const WorldSpec& spec) {
    if (spec.horizon < 1) throw SpecValidation("horizon must be positive");
    if (spec.kind == WorldKind::GridNav) {
        if (!std::holds_alternative<GridNavParams>(spec.params))
            throw SpecValidation("gridnav spec carries wrong parameter record");
        const auto& g = spec.grid();
        if (g.width < 1 || g.height < 1) throw SpecValidation("grid dimensions must be positive");
        if (!in_bounds(g, g.start) || !in_bounds(g, g.goal))
            throw SpecValidation("start and goal must be inside the grid");
        if (g.start == g.goal) throw SpecValidation("start and goal must differ");
        for (Cell w : g.walls) {
            if (!in_bounds(g, w)) throw SpecValidation("wall outside the grid");
            if (w == g.start || w == g.goal) throw SpecValidation("wall on start or goal");
        }
        if (spec.action_metric.kind != MetricKind::Discrete)
            throw SpecValidation("gridnav uses the discrete action metric");
    } else {
        if (!std::holds_alternative<SlingshotParams>(spec.params))
            throw SpecValidation("slingshot spec carries wrong parameter record");
        const auto& s = spec.sling();
        if (s.angles_deg.empty() || s.powers.empty())
            throw SpecValidation("angle and power grids must be nonempty");
        if (!(s.gravity > 0) || !std::isfinite(s.gravity))
            throw SpecValidation("gravity must be positive");
        if (!(s.time_step > 0) || !std::isfinite(s.time_step))
            throw SpecValidation("time_step must be positive");
        if (s.targets.empty()) throw SpecValidation("slingshot needs at least one target");
        for (const auto& t : s.targets)
            if (!(t.radius > 0)) throw SpecValidation("target radius must be positive");
        for (const auto& b : s.blocks)
            if (!(b.x0 < b.x1) || !(b.y0 < b.y1)) throw SpecValidation("degenerate block rectangle");
        if (spec.action_metric.kind != MetricKind::Euclidean ||
            spec.action_metric.bounds != std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.0, 1.0}})
            throw SpecValidation("slingshot uses the euclidean metric on [0,1]^2");
    }
}

std::vector<ActionVector> action_set(const WorldSpec& spec) {
    if (spec.kind == WorldKind::GridNav) return kGridActions;
    const auto& s = spec.sling();
    std::vector<ActionVector> actions;
    actions.reserve(s.angles_deg.size() * s.powers.size());
    for (std::size_t i = 0; i < s.angles_deg.size(); ++i)
        for (std::size_t j = 0; j < s.powers.size(); ++j)
            actions.push_back({grid_coord(i, s.angles_deg.size()), grid_coord(j, s.powers.size())});
    return actions;
}

WorldState reset(const WorldSpec& spec) {
    validate_spec(spec);
    WorldState state;
    if (spec.kind == WorldKind::GridNav) {
        state.body = GridNavState{spec.grid().start};
    } else {
        state.body = SlingshotState{std::vector<bool>(spec.sling().targets.size(), true)};
    }
    return state;
}

namespace {

StepResult step_gridnav(const WorldSpec& spec, WorldState& state, const ActionVector& action) {
    std::size_t idx = kGridActions.size();
    for (std::size_t i = 0; i < kGridActions.size(); ++i)
        if (kGridActions[i] == action) {
            idx = i;
            break;
        }
    if (idx == kGridActions.size()) throw InvalidAction("unknown gridnav action");

    const auto& g = spec.grid();
    auto& body = std::get<GridNavState>(state.body);
    Cell next{body.pos.x + static_cast<int>(kGridActions[idx][0]),
              body.pos.y + static_cast<int>(kGridActions[idx][1])};
    if (in_bounds(g, next) && !g.walls.contains(next)) body.pos = next;
    ++state.steps;

    if (body.pos == g.goal) {  // goal check before horizon check
        state.terminal = true;
        state.reward = 1;
    } else if (state.steps >= spec.horizon) {
        state.terminal = true;
        state.reward = 0;
    }
    return {state.terminal, state.terminal ? state.reward : 0};
}

StepResult step_slingshot(const WorldSpec& spec, WorldState& state, const ActionVector& action) {
    const auto& s = spec.sling();
    const auto actions = action_set(spec);
    std::size_t idx = actions.size();
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (actions[i] == action) {
            idx = i;
            break;
        }
    if (idx == actions.size()) throw InvalidAction("unknown slingshot action");

    const double angle = s.angles_deg[idx / s.powers.size()] * std::numbers::pi / 180.0;
    const double power = s.powers[idx % s.powers.size()];
    const double vx = power * std::cos(angle);
    const double vy = power * std::sin(angle);

    auto& body = std::get<SlingshotState>(state.body);
    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * s.time_step;
        const double x = vx * t;
        const double y = vy * t - 0.5 * s.gravity * t * t;
        if (k > 0 && y < 0) break;

        bool blocked = false;
        for (const auto& b : s.blocks)
            if (x >= b.x0 && x <= b.x1 && y >= b.y0 && y <= b.y1) {
                blocked = true;
                break;
            }
        if (blocked) break;

        for (std::size_t ti = 0; ti < s.targets.size(); ++ti) {
            if (!body.targets_alive[ti]) continue;
            const auto& tg = s.targets[ti];
            const double dx = x - tg.x, dy = y - tg.y;
            if (dx * dx + dy * dy <= tg.radius * tg.radius) body.targets_alive[ti] = false;
        }
    }
    ++state.steps;

    bool all_dead = true;
    for (bool alive : body.targets_alive)
        if (alive) all_dead = false;
    if (all_dead) {
        state.terminal = true;
        state.reward = 1;
    } else if (state.steps >= spec.horizon) {
        state.terminal = true;
        state.reward = 0;
    }
    return {state.terminal, state.terminal ? state.reward : 0};
}

}  // namespace

StepResult step(const WorldSpec& spec, WorldState& state, const ActionVector& action) {
    if (state.terminal) throw EpisodeFinished("step after terminal state");
    return spec.kind == WorldKind::GridNav ? step_gridnav(spec, state, action)
                                           : step_slingshot(spec, state, action);
}

EpisodeOutcome run_episode(const WorldSpec& spec, const std::vector<ActionVector>& actions) {
    WorldState state = reset(spec);
    EpisodeOutcome out;
    out.actions = actions;
    for (const auto& a : actions) {
        auto r = step(spec, state, a);
        if (r.terminal) break;
    }
    out.terminal_reward = state.terminal ? state.reward : 0;
    out.steps = state.steps;
    return out;
}

}  // namespace novdist
