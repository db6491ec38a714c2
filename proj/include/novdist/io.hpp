#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "novdist/harness.hpp"
#include "novdist/novelty.hpp"
#include "novdist/sampling.hpp"
#include "novdist/worlds.hpp"

namespace novdist::io {

using json = nlohmann::ordered_json;

// FNV-1a over raw bytes; used for spec hashes in space-file headers and
// input hashes in manifests.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Writes via a temp file in the same directory, then renames, so outputs
// appear fully written or not at all.
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

json to_json(const ActionMetricSpec& m);
ActionMetricSpec metric_from_json(const json& j);

json to_json(const WorldSpec& spec);
WorldSpec world_from_json(const json& j);
WorldSpec load_world(const std::filesystem::path& path);

json to_json(const NoveltySpec& nov);
NoveltySpec novelty_from_json(const json& j);
NoveltySpec load_novelty(const std::filesystem::path& path);
std::vector<NoveltySpec> load_suite(const std::filesystem::path& path);

// How a solution-space file was produced; recorded in the JSONL header.
struct SpaceProducer {
    std::string kind;  // "exact" | "sampled"
    SamplingConfig config;  // sampled only
};

// JSON Lines: header object, then one solution per line in canonical order.
std::string space_to_jsonl(const PartitionedSolutionSpace& space, std::uint64_t spec_hash,
                           const SpaceProducer& producer);
PartitionedSolutionSpace space_from_jsonl(const std::string& content);

json report_to_json(const DifficultyReport& report, const DifficultyThresholds& thresholds);

struct LevelsConfig {
    WorldKind kind = WorldKind::GridNav;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    LevelGenOptions options;
};
LevelsConfig levels_config_from_json(const json& j);
LevelsConfig load_levels_config(const std::filesystem::path& path);

std::string eval_report_to_csv(const EvalReport& report);
json eval_report_summary(const EvalReport& report);

}  // namespace novdist::io
