#include "novdist/novelty.hpp"

#include <cmath>

#include "novdist/errors.hpp"

namespace novdist {

namespace {

bool is_grid_kind(NoveltyKind k) {
    return k == NoveltyKind::AddWall || k == NoveltyKind::RemoveWall || k == NoveltyKind::MoveGoal;
}

template <class T>
const T& params_as(const NoveltySpec& nov) {
    if (!std::holds_alternative<T>(nov.params))
        throw InvalidNovelty("novelty '" + nov.id + "' carries the wrong parameter record");
    return std::get<T>(nov.params);
}

}  // namespace

WorldSpec apply_novelty(const WorldSpec& pre, const NoveltySpec& nov) {
    validate_spec(pre);
    const bool grid_world = pre.kind == WorldKind::GridNav;
    if (grid_world != is_grid_kind(nov.kind))
        throw KindMismatch("novelty '" + nov.id + "' does not apply to this world kind");

    WorldSpec post = pre;
    switch (nov.kind) {
        case NoveltyKind::AddWall: {
            const auto& p = params_as<AddWallParams>(nov);
            auto& g = std::get<GridNavParams>(post.params);
            if (g.walls.contains(p.cell)) throw InvalidNovelty("wall already present");
            g.walls.insert(p.cell);
            break;
        }
        case NoveltyKind::RemoveWall: {
            const auto& p = params_as<RemoveWallParams>(nov);
            auto& g = std::get<GridNavParams>(post.params);
            if (g.walls.erase(p.cell) == 0) throw InvalidNovelty("no wall at the given cell");
            break;
        }
        case NoveltyKind::MoveGoal: {
            const auto& p = params_as<MoveGoalParams>(nov);
            std::get<GridNavParams>(post.params).goal = p.goal;
            break;
        }
        case NoveltyKind::GravityScale: {
            const auto& p = params_as<GravityScaleParams>(nov);
            if (!(p.factor > 0) || !std::isfinite(p.factor))
                throw InvalidNovelty("gravity factor must be positive");
            std::get<SlingshotParams>(post.params).gravity *= p.factor;
            break;
        }
        case NoveltyKind::MoveTarget: {
            const auto& p = params_as<MoveTargetParams>(nov);
            auto& s = std::get<SlingshotParams>(post.params);
            if (p.index >= s.targets.size()) throw InvalidNovelty("target index out of range");
            s.targets[p.index].x = p.x;
            s.targets[p.index].y = p.y;
            break;
        }
        case NoveltyKind::AddBlock: {
            const auto& p = params_as<AddBlockParams>(nov);
            std::get<SlingshotParams>(post.params).blocks.push_back(p.block);
            break;
        }
        case NoveltyKind::RemoveBlock: {
            const auto& p = params_as<RemoveBlockParams>(nov);
            auto& s = std::get<SlingshotParams>(post.params);
            if (p.index >= s.blocks.size()) throw InvalidNovelty("block index out of range");
            s.blocks.erase(s.blocks.begin() + static_cast<std::ptrdiff_t>(p.index));
            break;
        }
        case NoveltyKind::ShrinkTarget:
        case NoveltyKind::GrowTarget: {
            const auto& p = params_as<ScaleTargetParams>(nov);
            const bool shrink = nov.kind == NoveltyKind::ShrinkTarget;
            if (!(p.factor > 0) || !std::isfinite(p.factor))
                throw InvalidNovelty("target scale factor must be positive");
            if (shrink && p.factor > 1.0) throw InvalidNovelty("shrink_target needs factor <= 1");
            if (!shrink && p.factor < 1.0) throw InvalidNovelty("grow_target needs factor >= 1");
            auto& s = std::get<SlingshotParams>(post.params);
            if (p.index >= s.targets.size()) throw InvalidNovelty("target index out of range");
            s.targets[p.index].radius *= p.factor;
            break;
        }
    }

    try {
        validate_spec(post);
    } catch (const SpecValidation& e) {
        throw InvalidNovelty(std::string("novelty '") + nov.id +
                             "' produces an invalid world: " + e.what());
    }
    return post;
}

const char* to_string(NoveltyKind k) {
    switch (k) {
        case NoveltyKind::AddWall: return "add_wall";
        case NoveltyKind::RemoveWall: return "remove_wall";
        case NoveltyKind::MoveGoal: return "move_goal";
        case NoveltyKind::GravityScale: return "gravity_scale";
        case NoveltyKind::MoveTarget: return "move_target";
        case NoveltyKind::AddBlock: return "add_block";
        case NoveltyKind::RemoveBlock: return "remove_block";
        case NoveltyKind::ShrinkTarget: return "shrink_target";
        case NoveltyKind::GrowTarget: return "grow_target";
    }
    return "?";
}

NoveltyKind novelty_kind_from_string(const std::string& s) {
    if (s == "add_wall") return NoveltyKind::AddWall;
    if (s == "remove_wall") return NoveltyKind::RemoveWall;
    if (s == "move_goal") return NoveltyKind::MoveGoal;
    if (s == "gravity_scale") return NoveltyKind::GravityScale;
    if (s == "move_target") return NoveltyKind::MoveTarget;
    if (s == "add_block") return NoveltyKind::AddBlock;
    if (s == "remove_block") return NoveltyKind::RemoveBlock;
    if (s == "shrink_target") return NoveltyKind::ShrinkTarget;
    if (s == "grow_target") return NoveltyKind::GrowTarget;
    throw SpecValidation("unknown novelty kind: " + s);
}

}  // namespace novdist
