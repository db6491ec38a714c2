#include <doctest.h>

#include <cmath>
#include <numbers>

#include "novdist/errors.hpp"
#include "novdist/novelty.hpp"
#include "novdist/sampling.hpp"

using namespace novdist;

namespace {

WorldSpec grid2x2() { return make_gridnav({2, 2, {}, {0, 0}, {1, 1}}, 2); }

// solvable within the horizon: each target sits halfway along the parabola
// of a distinct (angle, power) shot
WorldSpec sling() {
    SlingshotParams p;
    p.angles_deg = {30, 45, 60};
    p.powers = {4, 8};
    for (auto [deg, v] : {std::pair{30.0, 4.0}, std::pair{60.0, 8.0}}) {
        const double a = deg * std::numbers::pi / 180.0;
        const double t = 0.5 * 2.0 * v * std::sin(a) / p.gravity;
        p.targets.push_back(
            {v * std::cos(a) * t, v * std::sin(a) * t - 0.5 * p.gravity * t * t, 0.4});
    }
    return make_slingshot(std::move(p), 2);
}

// every solution of `sub` appears in `super`, partition by partition
bool is_subspace(const PartitionedSolutionSpace& sub, const PartitionedSolutionSpace& super) {
    for (const auto& [n, part] : sub.partitions) {
        auto it = super.partitions.find(n);
        if (it == super.partitions.end()) return false;
        for (const auto& s : part)
            if (std::find(it->second.begin(), it->second.end(), s) == it->second.end())
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("add_wall removes the blocked solution") {
    auto pre = grid2x2();
    NoveltySpec nov{"wall-10", NoveltyKind::AddWall, AddWallParams{{1, 0}}};
    auto post = apply_novelty(pre, nov);

    CHECK(pre.grid().walls.empty());  // input untouched
    CHECK(enumerate_solutions(pre).total_size == 2);
    CHECK(enumerate_solutions(post).total_size == 1);

    // deterministic transform
    auto post2 = apply_novelty(pre, nov);
    CHECK(post2.grid().walls == post.grid().walls);
}

TEST_CASE("identity gravity scale keeps the space identical") {
    auto pre = sling();
    auto post = apply_novelty(pre, {"noop", NoveltyKind::GravityScale, GravityScaleParams{1.0}});
    auto a = enumerate_solutions(pre);
    auto b = enumerate_solutions(post);
    CHECK(space_distance(a, b, NormalizationMode::Literal).distance == 0.0);
    CHECK(space_distance(a, b, NormalizationMode::Single).distance == 0.0);
}

TEST_CASE("novelty error paths") {
    auto pre = grid2x2();
    CHECK_THROWS_AS(apply_novelty(pre, {"rm", NoveltyKind::RemoveWall, RemoveWallParams{{1, 0}}}),
                    InvalidNovelty);
    CHECK_THROWS_AS(apply_novelty(pre, {"wall-goal", NoveltyKind::AddWall, AddWallParams{{1, 1}}}),
                    InvalidNovelty);
    CHECK_THROWS_AS(apply_novelty(pre, {"grav", NoveltyKind::GravityScale, GravityScaleParams{2.0}}),
                    KindMismatch);
    CHECK_THROWS_AS(apply_novelty(sling(), {"mg", NoveltyKind::MoveGoal, MoveGoalParams{{0, 0}}}),
                    KindMismatch);
    CHECK_THROWS_AS(
        apply_novelty(sling(), {"shrink-bad", NoveltyKind::ShrinkTarget, ScaleTargetParams{0, 2.0}}),
        InvalidNovelty);
    CHECK_THROWS_AS(
        apply_novelty(sling(), {"rm-block", NoveltyKind::RemoveBlock, RemoveBlockParams{0}}),
        InvalidNovelty);
}

TEST_CASE("solution-destroying transforms never create solutions") {
    auto pre = make_gridnav({3, 3, {Cell{1, 1}}, {0, 0}, {2, 2}}, 4);
    auto pre_space = enumerate_solutions(pre);

    for (const auto& nov : {NoveltySpec{"w", NoveltyKind::AddWall, AddWallParams{{1, 0}}},
                            NoveltySpec{"w2", NoveltyKind::AddWall, AddWallParams{{2, 1}}}}) {
        auto post_space = enumerate_solutions(apply_novelty(pre, nov));
        CHECK(is_subspace(post_space, pre_space));
        const double d = space_distance(pre_space, post_space, NormalizationMode::Literal).distance;
        CHECK(d >= 0.0);
    }

    auto sl = sling();
    auto sl_space = enumerate_solutions(sl);
    auto shrunk = enumerate_solutions(
        apply_novelty(sl, {"s", NoveltyKind::ShrinkTarget, ScaleTargetParams{0, 0.5}}));
    CHECK(is_subspace(shrunk, sl_space));
}

TEST_CASE("solution-creating transforms never destroy solutions") {
    auto pre = make_gridnav({3, 3, {Cell{1, 1}}, {0, 0}, {2, 2}}, 4);
    auto pre_space = enumerate_solutions(pre);
    auto post_space = enumerate_solutions(
        apply_novelty(pre, {"open", NoveltyKind::RemoveWall, RemoveWallParams{{1, 1}}}));
    CHECK(is_subspace(pre_space, post_space));
    for (auto mode : {NormalizationMode::Literal, NormalizationMode::Single}) {
        const double d = space_distance(pre_space, post_space, mode).distance;
        CHECK(d <= 0.0);
        CHECK(classify_difficulty(d) == DifficultyClass::Easy);
    }

    // target 1 is well clear of every other trajectory, so growing it cannot
    // let one shot kill both targets and prune the two-shot solutions
    auto sl = sling();
    auto sl_space = enumerate_solutions(sl);
    auto grown = enumerate_solutions(
        apply_novelty(sl, {"g", NoveltyKind::GrowTarget, ScaleTargetParams{1, 1.5}}));
    CHECK(is_subspace(sl_space, grown));
}
