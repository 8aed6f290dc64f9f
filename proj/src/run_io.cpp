#include "nltrans/run_io.hpp"

#include <chrono>
#include <fstream>

#include "json.hpp"

#include "nltrans/config_io.hpp"

namespace nltrans {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw IoError("cannot open " + (dir / name).string() + " for writing");
    return out;
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void write_diagnostics_csv(const Trajectory& traj, const fs::path& dir) {
    std::ofstream out = open_out(dir, "diagnostics.csv");
    out << csv_header() << "\n";
    for (const auto& r : traj.records) out << to_csv_row(r) << "\n";
}

void write_snapshots_jsonl(const Trajectory& traj, const fs::path& dir) {
    std::ofstream out = open_out(dir, "snapshots.jsonl");
    for (const auto& [t, field] : traj.snapshots) {
        json row;
        row["t"] = t;
        row["n"] = field.size();
        row["values"] = field.values_copy();
        out << row.dump() << "\n";
    }
}

int status_exit_code(RunStatus status) {
    switch (status) {
        case RunStatus::Completed: return 0;
        case RunStatus::AbortedNonPositive: return 4;
        case RunStatus::AbortedBlowUp: return 5;
    }
    return 1;
}

void write_errors_csv(const SweepReport& rep, const fs::path& dir) {
    std::ofstream out = open_out(dir, "errors.csv");
    out << "param,error\n";
    size_t rows = std::min(rep.parameters.size(), rep.errors.size());
    char buf[80];
    for (size_t i = 0; i < rows; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", rep.parameters[i], rep.errors[i]);
        out << buf << "\n";
    }
}

} // namespace

std::string sweep_report_to_json(const SweepReport& rep) {
    json j;
    j["experiment"] = rep.experiment;
    j["parameters"] = rep.parameters;
    j["errors"] = rep.errors;
    if (!rep.level_mins.empty()) j["level_mins"] = rep.level_mins;
    j["order"] = rep.order ? json(*rep.order) : json(nullptr);
    j["pass"] = rep.pass;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump(2);
}

RunManifest run_simulate(const SimConfig& config, const fs::path& out_dir) {
    Stopwatch watch;
    Trajectory traj = simulate(config);
    write_diagnostics_csv(traj, out_dir);
    write_snapshots_jsonl(traj, out_dir);

    RunManifest man;
    man.out_dir = out_dir.string();
    man.files = {"diagnostics.csv", "snapshots.jsonl"};
    man.exit_status = status_exit_code(traj.status);
    man.wall_seconds = watch.seconds();
    if (traj.status == RunStatus::AbortedNonPositive)
        write_error_json(out_dir, "NonPositiveField",
                         "run aborted: positivity lost after t=" +
                             std::to_string(traj.end_time),
                         "", man.exit_status);
    else if (traj.status == RunStatus::AbortedBlowUp)
        write_error_json(out_dir, "BlowUpDetected",
                         "run aborted: non-finite state after t=" +
                             std::to_string(traj.end_time),
                         "", man.exit_status);
    return man;
}

RunManifest run_viscosity_sweep(const SimConfig& base, const std::vector<double>& nu_list,
                                const fs::path& out_dir) {
    Stopwatch watch;
    SweepReport rep = viscosity_sweep(base, nu_list);
    open_out(out_dir, "report.json") << sweep_report_to_json(rep) << "\n";
    write_errors_csv(rep, out_dir);
    RunManifest man;
    man.out_dir = out_dir.string();
    man.files = {"report.json", "errors.csv"};
    man.exit_status = rep.pass ? 0 : 1;
    man.wall_seconds = watch.seconds();
    return man;
}

RunManifest run_link_experiment(const SimConfig& base, const std::vector<double>& amp_list,
                                double t_end, bool fault_no_rescale,
                                const fs::path& out_dir) {
    Stopwatch watch;
    if (base.initial.modes.empty() && base.initial.values.empty())
        throw ValidationError("initial.modes",
                              "link experiment needs a mode profile in the config");
    PeriodicGrid grid(base.n);
    // Profile = mean-zero part of the configured initial data.
    Field u0 = base.initial.build_raw(grid);
    double mean_value = mean(u0);
    Field profile = u0 + (-mean_value);

    LinkOptions opts;
    opts.cfl = base.cfl;
    opts.dealias = base.dealias;
    opts.fault_no_time_rescale = fault_no_rescale;
    SweepReport rep = link_experiment(mean_value, profile, amp_list, t_end, opts);
    if (fault_no_rescale) rep.note = "fault_no_time_rescale control";

    open_out(out_dir, "report.json") << sweep_report_to_json(rep) << "\n";
    write_errors_csv(rep, out_dir);
    RunManifest man;
    man.out_dir = out_dir.string();
    man.files = {"report.json", "errors.csv"};
    man.exit_status = rep.pass || fault_no_rescale ? 0 : 1;
    man.wall_seconds = watch.seconds();
    return man;
}

RunManifest run_decay_experiment(const SimConfig& base, double t_end,
                                 const fs::path& out_dir) {
    Stopwatch watch;
    PeriodicGrid grid(base.n);
    Field u0 = base.initial.build_raw(grid);
    double m0 = mean(u0);
    Field profile = u0 + (-m0);

    // The configured modes carry the amplitude; run them as-is (amp = 1).
    DecayReport rep = decay_experiment(m0, profile, 1.0, t_end, base.cfl);

    json j;
    j["experiment"] = "decay-experiment";
    j["mean"] = m0;
    j["t_end"] = t_end;
    j["r"] = wiener_norm(profile, 1.0) / m0;
    j["delta_a1"] = rep.delta_a1;
    j["delta_a0"] = rep.delta_a0;
    j["delta_linf"] = rep.delta_linf;
    j["monotone_a1"] = rep.monotone_a1;
    j["monotone_linf"] = rep.monotone_linf;
    j["pass"] = rep.pass;
    open_out(out_dir, "report.json") << j.dump(2) << "\n";

    RunManifest man;
    man.out_dir = out_dir.string();
    man.files = {"report.json"};
    man.exit_status = rep.pass ? 0 : 1;
    man.wall_seconds = watch.seconds();
    return man;
}

RunManifest run_certify_constants(double tol, const fs::path& out_dir) {
    Stopwatch watch;
    if (!(tol > 0.0)) throw InvalidParameter("certify-constants needs tol > 0");
    Bracket c = threshold([](double r) { return eval_F(r); }, tol);
    Bracket ct = threshold([](double s) { return eval_G(s); }, tol);

    json j;
    j["C_lo"] = c.lo;
    j["C_hi"] = c.hi;
    j["C_tilde_lo"] = ct.lo;
    j["C_tilde_hi"] = ct.hi;
    j["F_at_0.17"] = eval_F(0.17);
    j["G_at_0.24"] = eval_G(0.24);
    open_out(out_dir, "constants.json") << j.dump(2) << "\n";

    RunManifest man;
    man.out_dir = out_dir.string();
    man.files = {"constants.json"};
    man.exit_status = 0;
    man.wall_seconds = watch.seconds();
    return man;
}

void write_error_json(const fs::path& out_dir, const std::string& kind,
                      const std::string& message, const std::string& field,
                      int exit_code) {
    json j;
    j["error"] = kind;
    j["message"] = message;
    if (!field.empty()) j["field"] = field;
    j["exit_code"] = exit_code;
    open_out(out_dir, "error.json") << j.dump(2) << "\n";
}

} // namespace nltrans
