// wildfire: detection-probability analysis for Poisson-deployed fire sensors.
//
//   wildfire analyze  [--config c.json] [--model m] [--out p.csv]
//   wildfire simulate [--config c.json] [--model m] [--seed s] [--threads k] [--out p.csv]
//   wildfire sweep    [--config c.json] [--model m] [--out p.csv]
//
// CSV goes to --out (or the config's "output"), stdout otherwise. The summary
// goes to stdout when the CSV is written to a file, stderr otherwise.
// Exit codes: 0 success, 1 Monte Carlo band check failed, 2 config error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wildfire/commands.hpp"
#include "wildfire/scenario_config.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::string model;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::size_t> realizations;
    std::string out;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON scenario config (defaults when omitted)");
    cmd->add_option("--model", flags.model, "Restrict to one model")
        ->check(CLI::IsMember({"circular", "elliptical", "piriform"}));
    cmd->add_option("--out", flags.out, "CSV output path");
}

int run(const std::string& command, const Flags& flags) {
    wildfire::ScenarioConfig config;
    if (!flags.config_path.empty()) {
        config = wildfire::load_config(flags.config_path);
    }
    if (!flags.model.empty()) config.models = {wildfire::parse_fire_model(flags.model)};
    if (flags.seed) config.seed = *flags.seed;
    if (flags.threads) config.threads = *flags.threads;
    if (flags.realizations) config.realizations = *flags.realizations;
    if (!flags.out.empty()) config.output = flags.out;

    wildfire::CommandResult result;
    if (command == "analyze") {
        result = wildfire::run_analyze(config);
    } else if (command == "simulate") {
        result = wildfire::run_simulate(config);
    } else {
        result = wildfire::run_sweep(config);
    }

    if (config.output.empty()) {
        std::cout << result.csv;
        std::cerr << result.summary;
    } else {
        std::ofstream out(config.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << config.output << "'\n";
            return wildfire::kExitConfigError;
        }
        out << result.csv;
        std::cout << result.summary;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wildfire detection probability for Poisson-deployed sensor networks"};
    app.require_subcommand(1);

    Flags flags;
    auto* analyze = app.add_subcommand("analyze", "Closed-form p(t), t_cr, p_f and lambda_cr per model");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of p(t) against the closed form");
    auto* sweep = app.add_subcommand("sweep", "t_cr, lambda_cr and p_f along a density, wind or tau axis");
    for (auto* cmd : {analyze, simulate, sweep}) add_common(cmd, flags);
    simulate->add_option("--seed", flags.seed, "Master seed");
    simulate->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    simulate->add_option("-n,--realizations", flags.realizations, "Monte Carlo realizations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wildfire::kExitConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, flags);
    } catch (const wildfire::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
    } catch (const wildfire::ParameterError& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
    }
    return wildfire::kExitConfigError;
}
