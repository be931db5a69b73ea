#pragma once

#include <string>

#include "wildfire/scenario_config.hpp"

namespace wildfire {

/// Process exit codes of the CLI.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitValidationFailure = 1,
    kExitConfigError = 2,
};

struct CommandResult {
    std::string csv;
    std::string summary;
    int exit_code = kExitSuccess;
};

/// Analytic p(t) and N(K(t)) per model; summary with t_cr, p_f and lambda_cr(tau).
CommandResult run_analyze(const ScenarioConfig& config);

/// Monte Carlo p(t) next to the analytic curve. Exit code 1 when a circular or
/// elliptical grid point leaves the 3-standard-error band; piriform rows are
/// informational.
CommandResult run_simulate(const ScenarioConfig& config);

/// t_cr, lambda_cr(tau) and p_f along the configured sweep axis.
CommandResult run_sweep(const ScenarioConfig& config);

/// Nine significant digits, shortest form.
std::string format_number(double value);

/// True when |empirical - analytic| <= 3 sqrt(p (1 - p) / n) + 1 / n, with p
/// the analytic value. The 1/n term is the lattice spacing of a proportion
/// over n trials.
bool within_band(double analytic, double empirical, std::size_t n);

}  // namespace wildfire
