// casa: combinatorial ascending auction laboratory.
//
// Subcommands:
//   run        execute the CASA runs described by a scenario config
//   verify     run a named verification suite (see casa verify --list)
//   replay     re-validate a transcript and recompute its outcome
//   wdp        one-shot winner determination on explicit weights
//   guarantee  one-shot k-th rank guarantee on explicit valuations
//
// Exit codes: 0 all verdicts hold, 1 violation or mismatch, 2 config error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casa/errors.hpp"
#include "casa/guarantees.hpp"
#include "casa/scenario.hpp"
#include "casa/serialize.hpp"
#include "casa/verify.hpp"
#include "casa/wdp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::uint64_t seed_override, bool has_seed) {
    casa::ScenarioConfig cfg = casa::ScenarioConfig::load(config_path);
    std::vector<std::uint64_t> seeds = cfg.seeds;
    if (has_seed) seeds = {seed_override};
    fs::create_directories(out_dir);

    json index = json::array();
    for (std::uint64_t seed : seeds) {
        casa::RunArtifacts art = casa::run_scenario(cfg, seed);
        const std::string base = "run-" + std::to_string(seed);
        {
            std::ofstream t(fs::path(out_dir) / (base + ".transcript"));
            t << art.transcript.serialize();
        }
        {
            std::ofstream s(fs::path(out_dir) / (base + ".json"));
            s << art.summary.dump(2) << "\n";
        }
        index.push_back({{"seed", seed},
                         {"revenue", art.transcript.outcome.revenue},
                         {"stages", art.transcript.entries.size()}});
        std::cout << base << ": revenue " << art.transcript.outcome.revenue << ", "
                  << art.transcript.entries.size() << " stages\n";
    }
    std::ofstream idx(fs::path(out_dir) / "runs.json");
    idx << index.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, long long trials, std::uint64_t seed,
               const std::string& out_dir) {
    casa::SuiteOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    bool all_pass = true;
    std::vector<std::string> names;
    if (suite == "all")
        names = casa::suite_names();
    else
        names = {suite};
    for (const std::string& name : names) {
        const casa::SuiteOutcome out = casa::run_suite(name, opts);
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << out.suite << " — " << out.summary
                  << "\n";
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            std::ofstream f(fs::path(out_dir) / ("verify-" + name + ".json"));
            f << out.report.dump(2) << "\n";
        }
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "casa: cannot open " << path << "\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const casa::Transcript t = casa::Transcript::parse(text);
    const casa::ReplayReport r = casa::replay(t);
    if (r.ok) {
        std::cout << "ok: " << t.entries.size() << " actions replayed, outcome verified\n";
        return 0;
    }
    std::cout << "mismatch at line " << r.line << ": " << r.detail << "\n";
    return 1;
}

int cmd_wdp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "casa: cannot open " << path << "\n";
        return 2;
    }
    json j;
    in >> j;
    const casa::Menu menu = casa::menu_from_json(j.at("menu"));
    const std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    const casa::WdpResult r = casa::solve_wdp(menu, weights);
    json out{{"selection", r.selection}, {"objective", r.objective}, {"nodes", r.nodes}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_guarantee(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "casa: cannot open " << path << "\n";
        return 2;
    }
    json j;
    in >> j;
    const casa::Menu menu = casa::menu_from_json(j.at("menu"));
    const casa::ValuationProfile v = casa::valuation_from_json(j.at("valuations"));
    const double rk = casa::rank_guarantee(v, menu, k);
    json out{{"k", k}, {"guarantee", rk}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"casa - combinatorial ascending auction laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_dir, transcript_path, suite = "all";
    std::uint64_t seed = 20260808;
    long long trials = -1;
    int k = 2;
    bool list_suites = false;

    const char* env_out = std::getenv("CASA_OUT_DIR");
    const std::string default_out = env_out ? env_out : "out";

    auto* run = app.add_subcommand("run", "execute CASA runs from a scenario config");
    run->add_option("--config", config_path, "scenario config (JSON)")->required();
    run->add_option("--out-dir", out_dir, "output directory")->default_val(default_out);
    auto* run_seed = run->add_option("--seed", seed, "override the config seeds");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--trials", trials, "override suite trial count");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--out-dir", out_dir, "write per-suite reports here");
    verify->add_flag("--list", list_suites, "list suite names and exit");

    auto* replay = app.add_subcommand("replay", "re-validate a transcript");
    replay->add_option("--transcript", transcript_path, "transcript file")->required();

    auto* wdp = app.add_subcommand("wdp", "one-shot winner determination");
    wdp->add_option("--config", config_path, "JSON with menu and weights")->required();

    auto* guarantee = app.add_subcommand("guarantee", "one-shot rank guarantee");
    guarantee->add_option("--config", config_path, "JSON with menu and valuations")->required();
    guarantee->add_option("--k", k, "guarantee rank")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run))
            return cmd_run(config_path, out_dir, seed, run_seed->count() > 0);
        if (app.got_subcommand(verify)) {
            if (list_suites) {
                for (const auto& n : casa::suite_names()) std::cout << n << "\n";
                return 0;
            }
            return cmd_verify(suite, trials, seed, out_dir);
        }
        if (app.got_subcommand(replay)) return cmd_replay(transcript_path);
        if (app.got_subcommand(wdp)) return cmd_wdp(config_path);
        if (app.got_subcommand(guarantee)) return cmd_guarantee(config_path, k);
    } catch (const casa::ConfigError& e) {
        std::cerr << "casa: config error: " << e.what() << "\n";
        return 2;
    } catch (const casa::ParseError& e) {
        std::cerr << "casa: parse error: " << e.what() << "\n";
        return 2;
    } catch (const casa::ParamError& e) {
        std::cerr << "casa: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "casa: bad input: " << e.what() << "\n";
        return 2;
    } catch (const casa::Error& e) {
        std::cerr << "casa: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
