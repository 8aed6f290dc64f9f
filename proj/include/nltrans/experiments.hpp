#pragma once

#include <span>
#include <string>
#include <vector>

#include "nltrans/dynamics.hpp"

namespace nltrans {

/// Result of a multi-run study. `parameters` are the sweep values
/// (viscosities or amplitudes), `errors` the per-level metrics.
struct SweepReport {
    std::string experiment;
    std::vector<double> parameters;
    std::vector<double> errors;
    std::vector<double> level_mins; // viscosity sweep: min of u over each run
    std::optional<double> order;    // fitted convergence order, when defined
    bool pass{false};
    std::string note;
};

/// Log-ratio convergence order for a parameter sequence shrinking by
/// `ratio` per level: mean of log(e_i/e_{i+1}) / log(ratio).
double order_of_convergence(std::span<const double> errors, double ratio);

/// Vanishing-viscosity construction: run the viscous model for each nu
/// (with initial data mollified by eps = nu), compare consecutive final
/// states in L2, and check the minimum bound min u(t) >= min u0 - tol.
SweepReport viscosity_sweep(const SimConfig& base, std::span<const double> nu_list,
                            double min_tol = 1e-6);

struct LinkOptions {
    double cfl{0.5};
    bool dealias{true};
    bool fault_no_time_rescale{false}; // negative control: skip the 1/mean rescale
    double order_lo{2.7};              // pass band for the fitted order
    double order_hi{3.3};
};

/// Small-amplitude reduction study: for each amp a, integrate the full
/// model with u0 = mean + a*profile and the reduced model with
/// g0 = a*profile/mean, reconstruct u ~ mean + mean*g(x, t/mean), and
/// record the sup over 11 sampled times of the L2 mismatch. The fitted
/// order in a is ~3 when the reduction and the time rescaling are right.
SweepReport link_experiment(double mean_value, const Field& profile,
                            std::span<const double> amp_list, double t_end,
                            const LinkOptions& opts = {});

struct DecayReport {
    double delta_a1{};
    double delta_a0{};
    double delta_linf{};
    bool monotone_a1{};
    bool monotone_linf{};
    bool pass{};
};

/// Small-data relaxation to the mean: requires the certified regime
/// ||amp*profile||_{A1}/mean <= 0.17. Checks the A1 series is monotone
/// nonincreasing (slack 1e-9) and fits the exponential rates of the A1,
/// A0 and sup-norm deviations.
DecayReport decay_experiment(double mean_value, const Field& profile, double amp,
                             double t_end, double cfl = 0.5);

} // namespace nltrans
