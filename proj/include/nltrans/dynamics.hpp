#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "nltrans/diagnostics.hpp"

namespace nltrans {

/// Which right-hand side a run integrates.
struct ModelKind {
    enum class Tag { Arctan, ViscousArctan, Cccf, Porous };
    Tag tag{Tag::Arctan};
    double nu{0.0}; // ViscousArctan only
    int m{1};       // Porous only

    static ModelKind arctan() { return {Tag::Arctan, 0.0, 1}; }
    static ModelKind viscous(double nu) {
        if (!(nu > 0.0)) throw InvalidParameter("viscosity must be positive");
        return {Tag::ViscousArctan, nu, 1};
    }
    static ModelKind cccf() { return {Tag::Cccf, 0.0, 1}; }
    static ModelKind porous(int m) {
        if (m < 1) throw InvalidParameter("porous exponent must be >= 1");
        return {Tag::Porous, 0.0, m};
    }
    /// True for every model except Cccf: the state must stay positive.
    bool requires_positive() const { return tag != Tag::Cccf; }
    const char* name() const;
};

struct Mode {
    int k{1};
    double cos_amp{0.0};
    double sin_amp{0.0};
};

/// Initial data: either mean + trigonometric modes, or an explicit node
/// value list; optionally smoothed by mollify(., mollify_eps).
struct InitialSpec {
    double mean{0.0};
    std::vector<Mode> modes;
    std::vector<double> values; // if nonempty, used instead of mean+modes
    std::optional<double> mollify_eps;

    /// Node values before mollification.
    Field build_raw(PeriodicGrid grid) const;
    /// Node values with mollification applied.
    Field build(PeriodicGrid grid) const;
};

struct SimConfig {
    ModelKind model;
    int n{256};
    double t_end{1.0};
    double cfl{0.5};
    double snap_every{0.0};     // 0 = no periodic snapshots
    bool dealias{true};
    double diag_sym_every{0.0}; // 0 = never compute the O(n^2) dissipation
    InitialSpec initial;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

enum class RunStatus { Completed, AbortedNonPositive, AbortedBlowUp };

struct Trajectory {
    SimConfig config;
    std::vector<DiagnosticsRecord> records; // one per accepted step, first at t=0
    std::vector<std::pair<double, Field>> snapshots;
    Field final_field;  // state at end_time
    double end_time{0.0};
    RunStatus status{RunStatus::Completed};
};

using RhsFn = std::function<Field(const Field&)>;

/// Transport velocity arctan(Hu/u). Requires min(u) > 0.
Field velocity(const Field& u);

/// d/dt u = -(u Lambda(u) - Hu u_x) / (u^2 + (Hu)^2); divergence form of
/// -d/dx arctan(Hu/u). Requires min(u) > 0.
Field rhs_arctan(const Field& u, bool apply_dealias = true);

/// rhs_arctan plus nu * u_xx.
Field rhs_viscous(const Field& u, double nu, bool apply_dealias = true);

/// d/dt g = -Lambda(g) + d/dx(g Hg).
Field rhs_cccf(const Field& g, bool apply_dealias = true);

/// Nonlinear part of the Cccf model only: d/dx(g Hg). Used with the
/// integrating-factor stepper, which integrates -Lambda exactly.
Field rhs_cccf_nonlinear(const Field& g, bool apply_dealias = true);

/// d/dt u = -d/dx(Hu / u^m), expanded so no quotient is differentiated.
Field rhs_porous(const Field& u, int m, bool apply_dealias = true);

/// CFL-style step bound dt = cfl / rho from a linearized spectral-radius
/// estimate; capped by t_remaining. drop_stiff_linear removes the stiff
/// linear term from rho when integrating-factor stepping handles it.
double stable_dt(const Field& u, const ModelKind& model, double cfl,
                 double t_remaining = std::numeric_limits<double>::infinity(),
                 bool drop_stiff_linear = false);

/// Classical explicit RK4 step. Throws BlowUpDetected if any stage
/// produces a non-finite value.
Field step_rk4(const Field& u, double dt, const RhsFn& rhs);

/// Integrating-factor RK4: exact on d/dt u = L u for the diagonal
/// symbol L(k); `nonlinear` supplies the remaining terms.
Field step_ifrk4(const Field& u, double dt,
                 const std::function<double(int)>& linear_symbol,
                 const RhsFn& nonlinear);

/// Advance config.initial to t_end with adaptive steps. Records a
/// DiagnosticsRecord at every accepted step (d_sym on the diag_sym_every
/// grid), snapshots on the snap_every grid (exact landing), and returns
/// a partial trajectory with the failure time if positivity or
/// finiteness is lost.
Trajectory simulate(const SimConfig& config);

} // namespace nltrans
