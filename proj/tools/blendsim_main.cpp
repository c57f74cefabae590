#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "blendsim/config.hpp"
#include "blendsim/presets.hpp"
#include "blendsim/report.hpp"
#include "blendsim/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace blendsim;

bool use_color() {
    if (std::getenv("BLENDSIM_NO_COLOR") != nullptr) {
        return false;
    }
    return isatty(STDERR_FILENO) != 0;
}

std::string tag(const char* label, const char* ansi) {
    if (use_color()) {
        return std::string("\x1b[") + ansi + "m" + label + "\x1b[0m";
    }
    return label;
}

std::string error_tag() { return tag("error", "31"); }
std::string warn_tag() { return tag("warning", "33"); }

/// --config accepts a file path (with or without the .json extension) or
/// the name of a bundled preset.
ConfigLoad resolve_config(const std::string& config_arg) {
    if (fs::exists(config_arg)) {
        return load_config_file(config_arg);
    }
    if (fs::exists(config_arg + ".json")) {
        return load_config_file(config_arg + ".json");
    }
    if (auto text = preset_text(config_arg)) {
        return load_config_text(*text, fs::current_path());
    }
    ConfigLoad out;
    out.issues.push_back("config: no file or preset named '" + config_arg + "'");
    return out;
}

void apply_mode(Scenario& scenario, const std::string& mode) {
    if (mode.empty()) {
        return;
    }
    if (mode == "replication") {
        scenario.carbon_mode = CarbonMode::replication;
        scenario.adoption.mode = ShareMode::rescale;
        scenario.incentives.enforce_ci_band = false;
        scenario.incentives.rin_mode = RinMode::replication;
    } else if (mode == "strict-band") {
        scenario.incentives.enforce_ci_band = true;
    } else if (mode == "formula-ci") {
        scenario.carbon_mode = CarbonMode::formula;
    }
}

int print_issues(const std::vector<std::string>& issues) {
    for (const auto& issue : issues) {
        std::cerr << error_tag() << ": " << issue << "\n";
    }
    return 2;
}

int cmd_validate(const std::string& config_arg) {
    const auto load = resolve_config(config_arg);
    if (!load.issues.empty()) {
        return print_issues(load.issues);
    }
    std::cout << "OK\n";
    return 0;
}

int cmd_run(const std::string& config_arg, const std::string& out_dir, const std::string& mode,
            std::uint64_t seed, bool seed_given) {
    auto load = resolve_config(config_arg);
    if (!load.issues.empty()) {
        return print_issues(load.issues);
    }
    apply_mode(load.scenario, mode);
    if (seed_given) {
        if (!load.scenario.mc.has_value()) {
            load.scenario.mc = McSpec{};
        }
        load.scenario.mc->seed = seed;
    }
    try {
        auto result = run_scenario(load.scenario);
        result.config_hash = load.hash_hex;
        for (const auto& w : result.warnings) {
            std::cerr << warn_tag() << ": " << w << "\n";
        }
        write_result_tables(result, out_dir);
        write_manifest(make_manifest(load.hash_hex, result.seed, 0, result.mode_flags), out_dir);
        std::cout << "wrote shares, volumes, supply, carbon, economics tables to " << out_dir
                  << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << error_tag() << ": " << e.what() << "\n";
        return 1;
    }
}

int cmd_mc(const std::string& config_arg, const std::string& out_dir, const std::string& mode,
           std::uint64_t seed, bool seed_given, int runs, int jobs) {
    auto load = resolve_config(config_arg);
    if (!load.issues.empty()) {
        return print_issues(load.issues);
    }
    apply_mode(load.scenario, mode);
    McSpec spec = load.scenario.mc.value_or(McSpec{});
    if (seed_given) {
        spec.seed = seed;
    }
    if (runs > 0) {
        spec.n_runs = runs;
    }
    load.scenario.mc = spec;
    try {
        const auto report = run_mc(load.scenario, spec, jobs);
        write_mc_tables(report, out_dir);
        write_manifest(
            make_manifest(load.hash_hex, spec.seed, spec.n_runs, describe_mode_flags(load.scenario)),
            out_dir);
        std::cout << "wrote Monte Carlo band tables (" << spec.n_runs << " runs) to " << out_dir
                  << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << error_tag() << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blendsim: ethanol-blend decarbonization scenario engine"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_arg;
    std::string out_dir = "out";
    std::string mode;
    std::uint64_t seed = 0;
    int runs = 0;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--config", config_arg, "config file path or preset name")->required();
        if (with_out) {
            cmd->add_option("--out", out_dir, "output directory");
            cmd->add_option("--mode", mode, "mode override")
                ->check(CLI::IsMember({"replication", "strict-band", "formula-ci"}));
        }
    };

    auto* validate = app.add_subcommand("validate", "check a config and exit");
    add_common(validate, false);

    auto* run = app.add_subcommand("run", "single scenario run");
    add_common(run, true);
    auto* run_seed = run->add_option("--seed", seed, "override the scenario seed");

    auto* mc = app.add_subcommand("mc", "Monte Carlo run with percentile bands");
    add_common(mc, true);
    auto* mc_seed = mc->add_option("--seed", seed, "override the Monte Carlo seed");
    mc->add_option("--runs", runs, "override the number of runs")->check(CLI::PositiveNumber);
    mc->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* presets = app.add_subcommand("presets", "bundled scenario presets");
    auto* presets_list = presets->add_subcommand("list", "list preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_tag() << ": " << e.what() << "\n";
        return 2;
    }

    if (validate->parsed()) {
        return cmd_validate(config_arg);
    }
    if (run->parsed()) {
        return cmd_run(config_arg, out_dir, mode, seed, run_seed->count() > 0);
    }
    if (mc->parsed()) {
        return cmd_mc(config_arg, out_dir, mode, seed, mc_seed->count() > 0, runs, jobs);
    }
    if (presets->parsed()) {
        if (presets_list->parsed() || presets->get_subcommands().empty()) {
            for (const auto& name : preset_names()) {
                std::cout << name << "\n";
            }
            return 0;
        }
    }
    std::cerr << error_tag() << ": no command given\n";
    return 2;
}
