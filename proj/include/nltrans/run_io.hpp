#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nltrans/experiments.hpp"
#include "nltrans/theory.hpp"

namespace nltrans {

/// What a CLI invocation produced.
struct RunManifest {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> files; // created data files, relative to out_dir
    int exit_status{0};
    double wall_seconds{0.0};
};

/// File I/O problems (missing directory, unwritable file).
struct IoError : Error {
    using Error::Error;
};

/// Run one simulation and persist diagnostics.csv plus snapshots.jsonl.
/// Returns a manifest; an aborted run yields exit_status 4 (positivity)
/// or 5 (blow-up) with the partial outputs still written.
RunManifest run_simulate(const SimConfig& config, const std::filesystem::path& out_dir);

/// Sweep drivers: write report.json and errors.csv (and, for the decay
/// experiment, the diagnostics of its single run).
RunManifest run_viscosity_sweep(const SimConfig& base, const std::vector<double>& nu_list,
                                const std::filesystem::path& out_dir);
RunManifest run_link_experiment(const SimConfig& base, const std::vector<double>& amp_list,
                                double t_end, bool fault_no_rescale,
                                const std::filesystem::path& out_dir);
RunManifest run_decay_experiment(const SimConfig& base, double t_end,
                                 const std::filesystem::path& out_dir);

/// Evaluate the majorant thresholds and write constants.json with keys
/// C_lo, C_hi, C_tilde_lo, C_tilde_hi, F_at_0.17, G_at_0.24.
RunManifest run_certify_constants(double tol, const std::filesystem::path& out_dir);

/// Machine-readable failure report (error.json).
void write_error_json(const std::filesystem::path& out_dir, const std::string& kind,
                      const std::string& message, const std::string& field,
                      int exit_code);

std::string sweep_report_to_json(const SweepReport& rep);

} // namespace nltrans
