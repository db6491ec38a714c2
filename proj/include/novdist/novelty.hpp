#pragma once

#include <string>
#include <variant>

#include "novdist/worlds.hpp"

namespace novdist {

enum class NoveltyKind {
    // gridnav
    AddWall,
    RemoveWall,
    MoveGoal,
    // slingshot
    GravityScale,
    MoveTarget,
    AddBlock,
    RemoveBlock,
    ShrinkTarget,
    GrowTarget,
};

struct AddWallParams {
    Cell cell;
};
struct RemoveWallParams {
    Cell cell;
};
struct MoveGoalParams {
    Cell goal;
};
struct GravityScaleParams {
    double factor = 1.0;
};
struct MoveTargetParams {
    std::size_t index = 0;
    double x = 0, y = 0;
};
struct AddBlockParams {
    SlingshotParams::Block block;
};
struct RemoveBlockParams {
    std::size_t index = 0;
};
struct ScaleTargetParams {  // shrink_target (factor < 1) and grow_target (factor > 1)
    std::size_t index = 0;
    double factor = 1.0;
};

using NoveltyParams = std::variant<AddWallParams, RemoveWallParams, MoveGoalParams,
                                   GravityScaleParams, MoveTargetParams, AddBlockParams,
                                   RemoveBlockParams, ScaleTargetParams>;

// A deterministic transform from a pre-novel world to a post-novel one.
// Transforms never touch the action set or the action metric.
struct NoveltySpec {
    std::string id;
    NoveltyKind kind = NoveltyKind::GravityScale;
    NoveltyParams params;
};

// Returns the post-novel spec; the input is untouched. Throws KindMismatch
// when the novelty does not apply to the world kind, InvalidNovelty when the
// transform cannot be applied or would produce an invalid spec.
WorldSpec apply_novelty(const WorldSpec& pre, const NoveltySpec& nov);

const char* to_string(NoveltyKind k);
NoveltyKind novelty_kind_from_string(const std::string& s);

}  // namespace novdist
