#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "novdist/errors.hpp"
#include "novdist/harness.hpp"
#include "novdist/io.hpp"
#include "novdist/sampling.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using novdist::io::json;

unsigned resolve_jobs(unsigned jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("NG_DEFAULT_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json make_manifest(const std::string& command, const json& config, const json& inputs) {
    json m;
    m["tool"] = "novdist";
    m["version"] = kVersion;
    m["command"] = command;
    m["timestamp"] = timestamp_utc();
    m["config"] = config;
    m["inputs"] = inputs;
    return m;
}

json input_hash_entry(const std::filesystem::path& path) {
    const auto content = novdist::io::read_file(path);
    return {{"path", path.string()}, {"fnv1a64", novdist::io::hex64(novdist::io::fnv1a(content))}};
}

novdist::NormalizationMode parse_mode(const std::string& s) {
    if (s == "literal") return novdist::NormalizationMode::Literal;
    if (s == "single") return novdist::NormalizationMode::Single;
    throw CLI::ValidationError("--mode", "must be 'literal' or 'single'");
}

struct CommonOpts {
    std::string mode = "literal";
    double easy_max = 0.0;
    double medium_max = 0.3;
    unsigned jobs = 0;
};

int cmd_enumerate(const std::string& world_file, const std::string& out_file, std::uint64_t budget) {
    const auto spec = novdist::io::load_world(world_file);
    const auto spec_json = novdist::io::to_json(spec).dump();
    const auto space = novdist::enumerate_solutions(spec, budget);
    novdist::io::atomic_write(out_file, novdist::io::space_to_jsonl(
                                            space, novdist::io::fnv1a(spec_json), {"exact", {}}));
    const auto manifest = make_manifest(
        "enumerate", {{"budget", budget}}, json::array({input_hash_entry(world_file)}));
    novdist::io::atomic_write(out_file + ".manifest.json", manifest.dump(2) + "\n");
    std::cerr << "wrote " << space.total_size << " solutions to " << out_file << "\n";
    return 0;
}

int cmd_sample(const std::string& world_file, const std::string& out_file,
               const novdist::SamplingConfig& cfg, unsigned jobs) {
    const auto spec = novdist::io::load_world(world_file);
    const auto spec_json = novdist::io::to_json(spec).dump();
    const auto space = novdist::sample_solutions(spec, cfg, jobs);
    novdist::io::atomic_write(out_file, novdist::io::space_to_jsonl(
                                            space, novdist::io::fnv1a(spec_json), {"sampled", cfg}));
    const auto manifest =
        make_manifest("sample",
                      {{"agents", cfg.num_agents},
                       {"episodes", cfg.episodes_per_agent},
                       {"seed", cfg.master_seed}},
                      json::array({input_hash_entry(world_file)}));
    novdist::io::atomic_write(out_file + ".manifest.json", manifest.dump(2) + "\n");
    std::cerr << "wrote " << space.total_size << " solutions to " << out_file << "\n";
    return 0;
}

int cmd_distance(const std::string& pre_file, const std::string& post_file, const CommonOpts& opts,
                 const std::string& out_file, bool csv) {
    const auto pre = novdist::io::space_from_jsonl(novdist::io::read_file(pre_file));
    const auto post = novdist::io::space_from_jsonl(novdist::io::read_file(post_file));
    const novdist::DifficultyThresholds thresholds{opts.easy_max, opts.medium_max};
    auto report = novdist::space_distance(pre, post, parse_mode(opts.mode));
    report.difficulty = novdist::classify_difficulty(report.distance, thresholds);

    json out = novdist::io::report_to_json(report, thresholds);
    out["manifest"] = make_manifest(
        "distance",
        {{"mode", opts.mode}, {"easy_max", opts.easy_max}, {"medium_max", opts.medium_max}},
        json::array({input_hash_entry(pre_file), input_hash_entry(post_file)}));
    if (csv) {
        std::cout << "distance,difficulty,mode,total_a,total_b\n"
                  << json(report.distance).dump() << ',' << to_string(*report.difficulty) << ','
                  << opts.mode << ',' << report.total_a << ',' << report.total_b << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    if (!out_file.empty()) novdist::io::atomic_write(out_file, out.dump(2) + "\n");
    return 0;
}

int cmd_experiment(const std::string& suite_file, const std::string& levels_file,
                   const std::string& agent_name, std::size_t attempts,
                   const novdist::SamplingConfig& cfg, std::uint64_t eval_seed,
                   const CommonOpts& opts, const std::string& out_dir, unsigned jobs) {
    const auto suite = novdist::io::load_suite(suite_file);
    const auto levels_cfg = novdist::io::load_levels_config(levels_file);
    const auto levels =
        novdist::generate_levels(levels_cfg.kind, levels_cfg.seed, levels_cfg.count, levels_cfg.options);

    novdist::AgentConfig agent;
    agent.kind = novdist::agent_kind_from_string(agent_name);
    agent.attempts = attempts;

    const novdist::DifficultyThresholds thresholds{opts.easy_max, opts.medium_max};
    const auto report = novdist::run_experiment(suite, agent, levels, cfg, parse_mode(opts.mode),
                                                thresholds, eval_seed, jobs);

    std::filesystem::create_directories(out_dir);
    const auto dir = std::filesystem::path(out_dir);
    novdist::io::atomic_write(dir / "report.csv", novdist::io::eval_report_to_csv(report));
    novdist::io::atomic_write(dir / "summary.json",
                              novdist::io::eval_report_summary(report).dump(2) + "\n");
    const auto manifest = make_manifest(
        "experiment",
        {{"agent", agent_name},
         {"attempts", attempts},
         {"sampling_agents", cfg.num_agents},
         {"sampling_episodes", cfg.episodes_per_agent},
         {"sampling_seed", cfg.master_seed},
         {"eval_seed", eval_seed},
         {"mode", opts.mode},
         {"easy_max", opts.easy_max},
         {"medium_max", opts.medium_max}},
        json::array({input_hash_entry(suite_file), input_hash_entry(levels_file)}));
    novdist::io::atomic_write(dir / "manifest.json", manifest.dump(2) + "\n");

    std::cout << novdist::io::eval_report_to_csv(report);
    bool any_conclusive = false;
    for (const auto& row : report.rows) any_conclusive |= row.conclusive;
    return any_conclusive ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solution-space distance and novelty difficulty toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CommonOpts opts;
    std::string world_file, pre_file, post_file, suite_file, levels_file;
    std::string out_file, out_dir;
    std::uint64_t budget = novdist::kDefaultEnumerationBudget;
    novdist::SamplingConfig scfg;
    std::uint64_t eval_seed = 0;
    std::string agent_name = "replay_adapt";
    std::size_t attempts = 10;
    bool csv = false;

    auto* enumerate = app.add_subcommand("enumerate", "Exact solution space of a world");
    enumerate->add_option("--world", world_file, "world spec JSON")->required();
    enumerate->add_option("--out", out_file, "output JSONL path")->required();
    enumerate->add_option("--budget", budget, "max action sequences");

    auto* sample = app.add_subcommand("sample", "Random-agent sampled solution space");
    sample->add_option("--world", world_file)->required();
    sample->add_option("--out", out_file)->required();
    sample->add_option("--agents", scfg.num_agents)->check(CLI::PositiveNumber);
    sample->add_option("--episodes", scfg.episodes_per_agent)->check(CLI::PositiveNumber);
    sample->add_option("--seed", scfg.master_seed);
    sample->add_option("--jobs", opts.jobs);

    auto* distance = app.add_subcommand("distance", "Distance between two solution-space files");
    distance->add_option("--pre", pre_file)->required();
    distance->add_option("--post", post_file)->required();
    distance->add_option("--mode", opts.mode);
    distance->add_option("--easy-max", opts.easy_max);
    distance->add_option("--medium-max", opts.medium_max);
    distance->add_option("--out", out_file);
    distance->add_flag("--csv", csv, "emit a CSV row instead of JSON");

    auto* experiment = app.add_subcommand("experiment", "Full suite evaluation with agents");
    experiment->add_option("--suite", suite_file)->required();
    experiment->add_option("--levels", levels_file, "levels config JSON")->required();
    experiment->add_option("--agent", agent_name, "random|replay_adapt|replan_budget");
    experiment->add_option("--attempts", attempts)->check(CLI::PositiveNumber);
    experiment->add_option("--agents", scfg.num_agents)->check(CLI::PositiveNumber);
    experiment->add_option("--episodes", scfg.episodes_per_agent)->check(CLI::PositiveNumber);
    experiment->add_option("--seed", scfg.master_seed, "sampling master seed");
    experiment->add_option("--eval-seed", eval_seed, "agent evaluation seed");
    experiment->add_option("--mode", opts.mode);
    experiment->add_option("--easy-max", opts.easy_max);
    experiment->add_option("--medium-max", opts.medium_max);
    experiment->add_option("--out", out_dir, "output directory")->required();
    experiment->add_option("--jobs", opts.jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const unsigned jobs = resolve_jobs(opts.jobs);
    try {
        if (enumerate->parsed()) return cmd_enumerate(world_file, out_file, budget);
        if (sample->parsed()) return cmd_sample(world_file, out_file, scfg, jobs);
        if (distance->parsed()) return cmd_distance(pre_file, post_file, opts, out_file, csv);
        if (experiment->parsed())
            return cmd_experiment(suite_file, levels_file, agent_name, attempts, scfg, eval_seed,
                                  opts, out_dir, jobs);
    } catch (const novdist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
