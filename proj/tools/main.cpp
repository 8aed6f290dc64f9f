// Command-line front end: simulations, sweeps, the reduced-model link
// study, and threshold certification. See README.md for the config
// schema and output formats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "nltrans/config_io.hpp"
#include "nltrans/run_io.hpp"

namespace fs = std::filesystem;
using namespace nltrans;

namespace {

// Exit codes, also listed in --help.
constexpr int kExitOk = 0;
constexpr int kExitGeneric = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNonPositive = 4;
constexpr int kExitBlowUp = 5;
constexpr int kExitInvalidParameter = 6;
constexpr int kExitIo = 7;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidParameter(flag + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) throw InvalidParameter(flag + ": empty list");
    return out;
}

void print_manifest(const RunManifest& man) {
    std::cout << "wrote " << man.out_dir << ":";
    for (const auto& f : man.files) std::cout << " " << f;
    std::cout << "  (" << man.wall_seconds << " s, exit " << man.exit_status << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "nltrans: pseudo-spectral solver and verification suite for nonlocal\n"
        "transport models on the circle.\n\n"
        "Exit codes: 0 ok, 1 failed check/unexpected error, 2 config parse error,\n"
        "3 config validation error, 4 positivity lost, 5 blow-up detected,\n"
        "6 invalid parameter, 7 I/O error."};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    std::string nu_list_text, amp_list_text;
    double t_end_override = -1.0;
    double tol = 1e-6;
    bool fault_no_rescale = false;

    CLI::App* sim = app.add_subcommand("simulate", "Run one model to t_end");
    sim->add_option("--config", config_path, "JSON config path")->required();
    sim->add_option("--out", out_dir, "output directory");

    CLI::App* visc = app.add_subcommand(
        "viscosity-sweep", "Vanishing-viscosity convergence study");
    visc->add_option("--config", config_path, "JSON config path (base run)")->required();
    visc->add_option("--nu-list", nu_list_text, "comma-separated decreasing viscosities")
        ->required();
    visc->add_option("--out", out_dir, "output directory");

    CLI::App* link = app.add_subcommand(
        "link-experiment", "Small-amplitude reduction order study");
    link->add_option("--config", config_path,
                     "JSON config path (mean + profile + grid)")->required();
    link->add_option("--amp-list", amp_list_text, "comma-separated decreasing amplitudes")
        ->required();
    link->add_option("--t-end", t_end_override, "horizon override");
    link->add_flag("--fault-no-rescale", fault_no_rescale,
                   "negative control: skip the 1/mean time rescale");
    link->add_option("--out", out_dir, "output directory");

    CLI::App* decay = app.add_subcommand(
        "decay-experiment", "Small-data exponential relaxation check");
    decay->add_option("--config", config_path, "JSON config path")->required();
    decay->add_option("--t-end", t_end_override, "horizon override");
    decay->add_option("--out", out_dir, "output directory");

    CLI::App* cert = app.add_subcommand(
        "certify-constants", "Bisection brackets for the majorant thresholds");
    cert->add_option("--tol", tol, "bracket width");
    cert->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    auto fail = [&](const std::string& kind, const std::string& msg,
                    const std::string& field, int code) {
        std::cerr << "error (" << kind << "): " << msg << "\n";
        try {
            write_error_json(out_dir, kind, msg, field, code);
        } catch (const std::exception&) {
            // no output directory available; stderr already has the message
        }
        return code;
    };

    try {
        RunManifest man;
        if (sim->parsed()) {
            SimConfig cfg = parse_config(read_file(config_path));
            man = run_simulate(cfg, out_dir);
        } else if (visc->parsed()) {
            SimConfig cfg = parse_config(read_file(config_path));
            man = run_viscosity_sweep(cfg, parse_list(nu_list_text, "--nu-list"), out_dir);
        } else if (link->parsed()) {
            SimConfig cfg = parse_config(read_file(config_path));
            double t_end = t_end_override > 0.0 ? t_end_override : cfg.t_end;
            man = run_link_experiment(cfg, parse_list(amp_list_text, "--amp-list"),
                                      t_end, fault_no_rescale, out_dir);
        } else if (decay->parsed()) {
            SimConfig cfg = parse_config(read_file(config_path));
            double t_end = t_end_override > 0.0 ? t_end_override : cfg.t_end;
            man = run_decay_experiment(cfg, t_end, out_dir);
        } else if (cert->parsed()) {
            man = run_certify_constants(tol, out_dir);
        }
        man.config_path = config_path;
        print_manifest(man);
        return man.exit_status;
    } catch (const ParseError& e) {
        return fail("ParseError", e.what(), "", kExitParse);
    } catch (const ValidationError& e) {
        return fail("ValidationError", e.what(), e.field, kExitValidation);
    } catch (const NonPositiveField& e) {
        return fail("NonPositiveField", e.what(), "", kExitNonPositive);
    } catch (const BlowUpDetected& e) {
        return fail("BlowUpDetected", e.what(), "", kExitBlowUp);
    } catch (const InvalidParameter& e) {
        return fail("InvalidParameter", e.what(), "", kExitInvalidParameter);
    } catch (const UndefinedInverse& e) {
        return fail("UndefinedInverse", e.what(), "", kExitInvalidParameter);
    } catch (const InvalidField& e) {
        return fail("InvalidField", e.what(), "", kExitValidation);
    } catch (const IoError& e) {
        return fail("IoError", e.what(), "", kExitIo);
    } catch (const std::exception& e) {
        return fail("Error", e.what(), "", kExitGeneric);
    }
    return kExitOk;
}
