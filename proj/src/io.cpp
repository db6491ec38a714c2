#include "novdist/io.hpp"

#include <fstream>
#include <sstream>

#include "novdist/errors.hpp"

namespace novdist::io {

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SpecValidation("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw SpecValidation("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecValidation("cannot read: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json to_json(const ActionMetricSpec& m) {
    json j;
    j["kind"] = to_string(m.kind);
    if (m.kind == MetricKind::Euclidean) {
        json b = json::array();
        for (const auto& [lo, hi] : m.bounds) b.push_back(json::array({lo, hi}));
        j["bounds"] = b;
    }
    j["max_a"] = m.max_a;
    return j;
}

ActionMetricSpec metric_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "discrete") return ActionMetricSpec::discrete();
    if (kind != "euclidean") throw SpecValidation("unknown metric kind: " + kind);
    std::vector<std::pair<double, double>> bounds;
    for (const auto& b : j.at("bounds"))
        bounds.emplace_back(b.at(0).get<double>(), b.at(1).get<double>());
    return ActionMetricSpec::euclidean(std::move(bounds));
}

namespace {

json cell_to_json(Cell c) { return json::array({c.x, c.y}); }

Cell cell_from_json(const json& j) { return Cell{j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

json to_json(const WorldSpec& spec) {
    json j;
    j["horizon"] = spec.horizon;
    if (spec.kind == WorldKind::GridNav) {
        j["kind"] = "gridnav";
        const auto& g = spec.grid();
        json p;
        p["width"] = g.width;
        p["height"] = g.height;
        p["start"] = cell_to_json(g.start);
        p["goal"] = cell_to_json(g.goal);
        json walls = json::array();
        for (Cell w : g.walls) walls.push_back(cell_to_json(w));
        p["walls"] = walls;
        j["params"] = p;
    } else {
        j["kind"] = "slingshot";
        const auto& s = spec.sling();
        json p;
        p["angles_deg"] = s.angles_deg;
        p["powers"] = s.powers;
        p["gravity"] = s.gravity;
        p["time_step"] = s.time_step;
        json targets = json::array();
        for (const auto& t : s.targets)
            targets.push_back({{"x", t.x}, {"y", t.y}, {"radius", t.radius}});
        p["targets"] = targets;
        json blocks = json::array();
        for (const auto& b : s.blocks)
            blocks.push_back({{"x0", b.x0}, {"y0", b.y0}, {"x1", b.x1}, {"y1", b.y1}});
        p["blocks"] = blocks;
        j["params"] = p;
    }
    return j;
}

WorldSpec world_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int horizon = j.at("horizon").get<int>();
    const json& p = j.at("params");
    if (kind == "gridnav") {
        GridNavParams g;
        g.width = p.at("width").get<int>();
        g.height = p.at("height").get<int>();
        g.start = cell_from_json(p.at("start"));
        g.goal = cell_from_json(p.at("goal"));
        if (p.contains("walls"))
            for (const auto& w : p.at("walls")) g.walls.insert(cell_from_json(w));
        return make_gridnav(std::move(g), horizon);
    }
    if (kind == "slingshot") {
        SlingshotParams s;
        s.angles_deg = p.at("angles_deg").get<std::vector<double>>();
        s.powers = p.at("powers").get<std::vector<double>>();
        s.gravity = p.at("gravity").get<double>();
        s.time_step = p.at("time_step").get<double>();
        for (const auto& t : p.at("targets"))
            s.targets.push_back({t.at("x").get<double>(), t.at("y").get<double>(),
                                 t.at("radius").get<double>()});
        if (p.contains("blocks"))
            for (const auto& b : p.at("blocks"))
                s.blocks.push_back({b.at("x0").get<double>(), b.at("y0").get<double>(),
                                    b.at("x1").get<double>(), b.at("y1").get<double>()});
        return make_slingshot(std::move(s), horizon);
    }
    throw SpecValidation("unknown world kind: " + kind);
}

WorldSpec load_world(const std::filesystem::path& path) {
    try {
        return world_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw SpecValidation("malformed world file " + path.string() + ": " + e.what());
    }
}

json to_json(const NoveltySpec& nov) {
    json j;
    j["id"] = nov.id;
    j["kind"] = to_string(nov.kind);
    json p;
    switch (nov.kind) {
        case NoveltyKind::AddWall:
            p["cell"] = cell_to_json(std::get<AddWallParams>(nov.params).cell);
            break;
        case NoveltyKind::RemoveWall:
            p["cell"] = cell_to_json(std::get<RemoveWallParams>(nov.params).cell);
            break;
        case NoveltyKind::MoveGoal:
            p["goal"] = cell_to_json(std::get<MoveGoalParams>(nov.params).goal);
            break;
        case NoveltyKind::GravityScale:
            p["factor"] = std::get<GravityScaleParams>(nov.params).factor;
            break;
        case NoveltyKind::MoveTarget: {
            const auto& m = std::get<MoveTargetParams>(nov.params);
            p["index"] = m.index;
            p["x"] = m.x;
            p["y"] = m.y;
            break;
        }
        case NoveltyKind::AddBlock: {
            const auto& b = std::get<AddBlockParams>(nov.params).block;
            p["x0"] = b.x0;
            p["y0"] = b.y0;
            p["x1"] = b.x1;
            p["y1"] = b.y1;
            break;
        }
        case NoveltyKind::RemoveBlock:
            p["index"] = std::get<RemoveBlockParams>(nov.params).index;
            break;
        case NoveltyKind::ShrinkTarget:
        case NoveltyKind::GrowTarget: {
            const auto& sp = std::get<ScaleTargetParams>(nov.params);
            p["index"] = sp.index;
            p["factor"] = sp.factor;
            break;
        }
    }
    j["params"] = p;
    return j;
}

NoveltySpec novelty_from_json(const json& j) {
    NoveltySpec nov;
    nov.id = j.at("id").get<std::string>();
    nov.kind = novelty_kind_from_string(j.at("kind").get<std::string>());
    const json& p = j.at("params");
    switch (nov.kind) {
        case NoveltyKind::AddWall: nov.params = AddWallParams{cell_from_json(p.at("cell"))}; break;
        case NoveltyKind::RemoveWall:
            nov.params = RemoveWallParams{cell_from_json(p.at("cell"))};
            break;
        case NoveltyKind::MoveGoal: nov.params = MoveGoalParams{cell_from_json(p.at("goal"))}; break;
        case NoveltyKind::GravityScale:
            nov.params = GravityScaleParams{p.at("factor").get<double>()};
            break;
        case NoveltyKind::MoveTarget:
            nov.params = MoveTargetParams{p.at("index").get<std::size_t>(),
                                          p.at("x").get<double>(), p.at("y").get<double>()};
            break;
        case NoveltyKind::AddBlock:
            nov.params = AddBlockParams{{p.at("x0").get<double>(), p.at("y0").get<double>(),
                                         p.at("x1").get<double>(), p.at("y1").get<double>()}};
            break;
        case NoveltyKind::RemoveBlock:
            nov.params = RemoveBlockParams{p.at("index").get<std::size_t>()};
            break;
        case NoveltyKind::ShrinkTarget:
        case NoveltyKind::GrowTarget:
            nov.params = ScaleTargetParams{p.at("index").get<std::size_t>(),
                                           p.at("factor").get<double>()};
            break;
    }
    return nov;
}

NoveltySpec load_novelty(const std::filesystem::path& path) {
    try {
        return novelty_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw SpecValidation("malformed novelty file " + path.string() + ": " + e.what());
    }
}

std::vector<NoveltySpec> load_suite(const std::filesystem::path& path) {
    try {
        const json j = json::parse(read_file(path));
        std::vector<NoveltySpec> suite;
        for (const auto& n : j.at("novelties")) suite.push_back(novelty_from_json(n));
        if (suite.empty()) throw SpecValidation("suite file lists no novelties");
        return suite;
    } catch (const json::exception& e) {
        throw SpecValidation("malformed suite file " + path.string() + ": " + e.what());
    }
}

std::string space_to_jsonl(const PartitionedSolutionSpace& space, std::uint64_t spec_hash,
                           const SpaceProducer& producer) {
    json header;
    header["metric"] = to_json(space.metric);
    header["spec_hash"] = hex64(spec_hash);
    header["total_size"] = space.total_size;
    json prod;
    prod["kind"] = producer.kind;
    if (producer.kind == "sampled") {
        prod["num_agents"] = producer.config.num_agents;
        prod["episodes_per_agent"] = producer.config.episodes_per_agent;
        prod["master_seed"] = producer.config.master_seed;
    }
    header["producer"] = prod;

    std::string out = header.dump();
    out += '\n';
    for (const auto& [n, part] : space.partitions)
        for (const auto& sol : part) {
            json line;
            line["length"] = n;
            json acts = json::array();
            for (const auto& a : sol.actions) acts.push_back(a);
            line["actions"] = acts;
            out += line.dump();
            out += '\n';
        }
    return out;
}

PartitionedSolutionSpace space_from_jsonl(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line)) throw SpecValidation("space file is empty");
    ActionMetricSpec metric;
    try {
        metric = metric_from_json(json::parse(line).at("metric"));
        std::vector<Solution> solutions;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const json j = json::parse(line);
            Solution sol;
            for (const auto& a : j.at("actions")) sol.actions.push_back(a.get<ActionVector>());
            if (sol.length() != j.at("length").get<std::size_t>())
                throw SpecValidation("solution length field disagrees with actions");
            solutions.push_back(std::move(sol));
        }
        return partition_space(solutions, metric);
    } catch (const json::exception& e) {
        throw SpecValidation(std::string("malformed space file: ") + e.what());
    }
}

json report_to_json(const DifficultyReport& report, const DifficultyThresholds& thresholds) {
    json j;
    j["distance"] = report.distance;
    if (report.difficulty) j["difficulty"] = to_string(*report.difficulty);
    j["mode"] = to_string(report.mode);
    j["total_a"] = report.total_a;
    j["total_b"] = report.total_b;
    j["thresholds"] = {{"easy_max", thresholds.easy_max}, {"medium_max", thresholds.medium_max}};
    json parts = json::array();
    for (const auto& p : report.per_partition)
        parts.push_back({{"length", p.length},
                         {"size_a", p.size_a},
                         {"size_b", p.size_b},
                         {"matched_sum", p.matched_sum},
                         {"term", p.term}});
    j["per_partition"] = parts;
    return j;
}

LevelsConfig levels_config_from_json(const json& j) {
    LevelsConfig cfg;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gridnav")
        cfg.kind = WorldKind::GridNav;
    else if (kind == "slingshot")
        cfg.kind = WorldKind::Slingshot;
    else
        throw SpecValidation("unknown level kind: " + kind);
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.count = j.at("count").get<std::size_t>();
    if (j.contains("grid_options")) {
        const json& g = j.at("grid_options");
        auto& o = cfg.options.grid;
        if (g.contains("width")) o.width = g.at("width").get<int>();
        if (g.contains("height")) o.height = g.at("height").get<int>();
        if (g.contains("horizon")) o.horizon = g.at("horizon").get<int>();
        if (g.contains("start")) o.start = cell_from_json(g.at("start"));
        if (g.contains("goal")) o.goal = cell_from_json(g.at("goal"));
        if (g.contains("required_walls"))
            for (const auto& c : g.at("required_walls")) o.required_walls.push_back(cell_from_json(c));
        if (g.contains("forbidden_walls"))
            for (const auto& c : g.at("forbidden_walls"))
                o.forbidden_walls.push_back(cell_from_json(c));
        if (g.contains("max_extra_walls")) o.max_extra_walls = g.at("max_extra_walls").get<int>();
    }
    if (j.contains("sling_options")) {
        const json& s = j.at("sling_options");
        auto& o = cfg.options.sling;
        if (s.contains("angles_deg")) o.angles_deg = s.at("angles_deg").get<std::vector<double>>();
        if (s.contains("powers")) o.powers = s.at("powers").get<std::vector<double>>();
        if (s.contains("gravity")) o.gravity = s.at("gravity").get<double>();
        if (s.contains("time_step")) o.time_step = s.at("time_step").get<double>();
        if (s.contains("shots")) o.shots = s.at("shots").get<int>();
        if (s.contains("max_targets")) o.max_targets = s.at("max_targets").get<int>();
        if (s.contains("target_radius")) o.target_radius = s.at("target_radius").get<double>();
    }
    return cfg;
}

LevelsConfig load_levels_config(const std::filesystem::path& path) {
    try {
        return levels_config_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw SpecValidation("malformed levels config " + path.string() + ": " + e.what());
    }
}

namespace {

std::string fmt_double(double v) {
    // Shortest round-trip representation, same as the JSON writer.
    return json(v).dump();
}

}  // namespace

std::string eval_report_to_csv(const EvalReport& report) {
    std::string csv =
        "novelty_id,novelty_kind,mean_distance,difficulty,pre_pass_pct,post_pass_pct,"
        "pass_pct_diff,levels_used,conclusive\n";
    for (const auto& row : report.rows) {
        csv += row.novelty_id + ',' + row.novelty_kind + ',';
        csv += row.conclusive ? fmt_double(row.mean_distance) : "";
        csv += ',';
        csv += row.conclusive ? to_string(*row.difficulty) : "inconclusive";
        csv += ',' + fmt_double(row.pre_pass_rate * 100.0);
        csv += ',' + fmt_double(row.post_pass_rate * 100.0);
        csv += ',' + fmt_double(row.pass_pct_diff());
        csv += ',' + std::to_string(row.levels_used);
        csv += ',' + std::string(row.conclusive ? "true" : "false");
        csv += '\n';
    }
    return csv;
}

json eval_report_summary(const EvalReport& report) {
    json j;
    json by_class = json::object();
    for (const auto& [cls, rate] : report.mean_post_pass_by_class)
        by_class[to_string(cls)] = rate * 100.0;
    j["mean_post_pass_pct_by_class"] = by_class;
    if (report.spearman)
        j["spearman_rho"] = *report.spearman;
    else
        j["spearman_rho"] = nullptr;
    j["mode"] = to_string(report.mode);
    j["thresholds"] = {{"easy_max", report.thresholds.easy_max},
                       {"medium_max", report.thresholds.medium_max}};
    j["seeds"] = {{"eval_seed", report.eval_seed},
                  {"sampling_master_seed", report.sampling.master_seed}};
    j["sampling"] = {{"num_agents", report.sampling.num_agents},
                     {"episodes_per_agent", report.sampling.episodes_per_agent}};
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["novelty_id"] = row.novelty_id;
        r["novelty_kind"] = row.novelty_kind;
        r["conclusive"] = row.conclusive;
        if (row.conclusive) {
            r["mean_distance"] = row.mean_distance;
            r["difficulty"] = to_string(*row.difficulty);
        }
        r["pre_pass_pct"] = row.pre_pass_rate * 100.0;
        r["post_pass_pct"] = row.post_pass_rate * 100.0;
        r["pass_pct_diff"] = row.pass_pct_diff();
        r["levels_used"] = row.levels_used;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace novdist::io
