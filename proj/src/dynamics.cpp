#include "nltrans/dynamics.hpp"

#include <cmath>

namespace nltrans {

const char* ModelKind::name() const {
    switch (tag) {
        case Tag::Arctan: return "arctan";
        case Tag::ViscousArctan: return "viscous";
        case Tag::Cccf: return "cccf";
        case Tag::Porous: return "porous";
    }
    return "?";
}

Field InitialSpec::build_raw(PeriodicGrid grid) const {
    if (!values.empty()) {
        if (static_cast<int>(values.size()) != grid.n)
            throw ValidationError("initial.values",
                                  "explicit value list length does not match n");
        return Field(grid, values);
    }
    return Field::sample(grid, [this](double x) {
        double v = mean;
        for (const Mode& m : modes)
            v += m.cos_amp * std::cos(m.k * x) + m.sin_amp * std::sin(m.k * x);
        return v;
    });
}

Field InitialSpec::build(PeriodicGrid grid) const {
    Field u = build_raw(grid);
    if (mollify_eps) u = mollify(u, *mollify_eps);
    return u;
}

void SimConfig::validate() const {
    if (n < 8 || n % 2 != 0)
        throw ValidationError("n", "n must be even and >= 8");
    if (!(t_end > 0.0)) throw ValidationError("t_end", "t_end must be positive");
    if (!(cfl > 0.0) || cfl > 1.0)
        throw ValidationError("cfl", "cfl must lie in (0, 1]");
    if (snap_every < 0.0)
        throw ValidationError("snap_every", "snap_every must be >= 0");
    if (diag_sym_every < 0.0)
        throw ValidationError("diag_sym_every", "diag_sym_every must be >= 0");
    if (model.tag == ModelKind::Tag::ViscousArctan && !(model.nu > 0.0))
        throw ValidationError("nu", "viscous model needs nu > 0");
    if (model.tag == ModelKind::Tag::Porous && model.m < 1)
        throw ValidationError("m", "porous model needs m >= 1");
    for (const Mode& m : initial.modes)
        if (m.k < 1) throw ValidationError("initial.modes", "mode k must be >= 1");
    if (!initial.values.empty() && static_cast<int>(initial.values.size()) != n)
        throw ValidationError("initial.values",
                              "explicit value list length does not match n");
    if (initial.mollify_eps && *initial.mollify_eps < 0.0)
        throw ValidationError("initial.mollify_eps", "mollify_eps must be >= 0");
    if (model.requires_positive()) {
        Field u0 = initial.build(PeriodicGrid(n));
        if (!(min_value(u0) > 0.0))
            throw ValidationError("initial",
                                  "initial data must be strictly positive for this model");
    }
}

namespace {

void require_positive(const Field& u, const char* what) {
    if (min_value(u) <= 0.0)
        throw NonPositiveField(std::string(what) + " requires min(u) > 0");
}

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

} // namespace

Field velocity(const Field& u) {
    require_positive(u, "velocity");
    Field Hu = hilbert(u);
    Field v = Field::zeros(u.grid());
    for (int j = 0; j < u.size(); ++j) v[j] = std::atan(Hu[j] / u[j]);
    return v;
}

Field rhs_arctan(const Field& u, bool apply_dealias) {
    require_positive(u, "rhs_arctan");
    Field Hu = hilbert(u);
    Field Lu = lambda_op(u);
    Field ux = derivative(u);
    Field r = Field::zeros(u.grid());
    for (int j = 0; j < u.size(); ++j) {
        double q = u[j] * u[j] + Hu[j] * Hu[j];
        r[j] = -(u[j] * Lu[j] - Hu[j] * ux[j]) / q;
    }
    return apply_dealias ? dealias(r) : r;
}

Field rhs_viscous(const Field& u, double nu, bool apply_dealias) {
    if (!(nu > 0.0)) throw InvalidParameter("rhs_viscous needs nu > 0");
    Field r = rhs_arctan(u, apply_dealias);
    Field uxx = second_derivative(u);
    for (int j = 0; j < r.size(); ++j) r[j] += nu * uxx[j];
    return r;
}

Field rhs_cccf_nonlinear(const Field& g, bool apply_dealias) {
    Field p = g * hilbert(g);
    if (apply_dealias) p = dealias(p);
    return derivative(p);
}

Field rhs_cccf(const Field& g, bool apply_dealias) {
    Field r = rhs_cccf_nonlinear(g, apply_dealias);
    Field Lg = lambda_op(g);
    for (int j = 0; j < r.size(); ++j) r[j] -= Lg[j];
    return r;
}

Field rhs_porous(const Field& u, int m, bool apply_dealias) {
    if (m < 1) throw InvalidParameter("rhs_porous needs m >= 1");
    require_positive(u, "rhs_porous");
    Field Hu = hilbert(u);
    Field Lu = lambda_op(u);
    Field ux = derivative(u);
    Field r = Field::zeros(u.grid());
    for (int j = 0; j < u.size(); ++j)
        r[j] = -(Lu[j] * u[j] - m * Hu[j] * ux[j]) / ipow(u[j], m + 1);
    return apply_dealias ? dealias(r) : r;
}

double stable_dt(const Field& u, const ModelKind& model, double cfl,
                 double t_remaining, bool drop_stiff_linear) {
    if (!(cfl > 0.0) || cfl > 1.0) throw InvalidParameter("cfl must lie in (0, 1]");
    const double half_n = 0.5 * u.size();
    double rho = 0.0;
    switch (model.tag) {
        case ModelKind::Tag::Arctan:
        case ModelKind::Tag::ViscousArctan: {
            Field Hu = hilbert(u);
            double m1 = 0.0, m2 = 0.0;
            for (int j = 0; j < u.size(); ++j) {
                double q = u[j] * u[j] + Hu[j] * Hu[j];
                m1 = std::max(m1, u[j] / q);
                m2 = std::max(m2, std::abs(Hu[j]) / q);
            }
            rho = half_n * m1 + half_n * m2;
            if (model.tag == ModelKind::Tag::ViscousArctan && !drop_stiff_linear)
                rho += model.nu * half_n * half_n;
            break;
        }
        case ModelKind::Tag::Cccf: {
            Field Hg = hilbert(u);
            double mg = 0.0, mh = 0.0;
            for (int j = 0; j < u.size(); ++j) {
                mg = std::max(mg, std::abs(u[j]));
                mh = std::max(mh, std::abs(Hg[j]));
            }
            rho = 2.0 * half_n * mg + half_n * mh;
            if (!drop_stiff_linear) rho += half_n;
            break;
        }
        case ModelKind::Tag::Porous: {
            Field Hu = hilbert(u);
            double m1 = 0.0, m2 = 0.0;
            for (int j = 0; j < u.size(); ++j) {
                m1 = std::max(m1, 1.0 / ipow(u[j], model.m));
                m2 = std::max(m2, std::abs(Hu[j]) / ipow(u[j], model.m + 1));
            }
            rho = half_n * m1 + half_n * model.m * m2;
            break;
        }
    }
    if (!std::isfinite(rho)) throw BlowUpDetected("non-finite step-size estimate");
    double dt = rho > 0.0 ? cfl / rho : t_remaining;
    return std::min(dt, t_remaining);
}

namespace {

void check_stage(const Field& f) {
    if (!all_finite(f)) throw BlowUpDetected("non-finite value in time step");
}

} // namespace

Field step_rk4(const Field& u, double dt, const RhsFn& rhs) {
    if (!(dt > 0.0)) throw InvalidParameter("step needs dt > 0");
    Field k1 = rhs(u);
    check_stage(k1);
    Field k2 = rhs(u + (0.5 * dt) * k1);
    check_stage(k2);
    Field k3 = rhs(u + (0.5 * dt) * k2);
    check_stage(k3);
    Field k4 = rhs(u + dt * k3);
    check_stage(k4);
    Field out = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    check_stage(out);
    return out;
}

Field step_ifrk4(const Field& u, double dt,
                 const std::function<double(int)>& linear_symbol,
                 const RhsFn& nonlinear) {
    if (!(dt > 0.0)) throw InvalidParameter("step needs dt > 0");
    const int n = u.size();

    std::vector<double> eh(n), ef(n); // exp(sigma dt/2), exp(sigma dt)
    {
        Spectrum probe = Spectrum::zeros(u.grid());
        for (int i = 0; i < n; ++i) {
            double s = linear_symbol(probe.wavenumber(i));
            eh[i] = std::exp(0.5 * dt * s);
            ef[i] = std::exp(dt * s);
        }
    }

    auto nl_hat = [&](const Field& f) {
        Field r = nonlinear(f);
        check_stage(r);
        return to_spectrum(r);
    };

    Spectrum uh = to_spectrum(u);
    Spectrum n1 = nl_hat(u);

    Spectrum sa = Spectrum::zeros(u.grid());
    for (int i = 0; i < n; ++i) sa[i] = eh[i] * (uh[i] + 0.5 * dt * n1[i]);
    Spectrum n2 = nl_hat(to_field(sa));

    Spectrum sb = Spectrum::zeros(u.grid());
    for (int i = 0; i < n; ++i) sb[i] = eh[i] * uh[i] + 0.5 * dt * n2[i];
    Spectrum n3 = nl_hat(to_field(sb));

    Spectrum sc = Spectrum::zeros(u.grid());
    for (int i = 0; i < n; ++i) sc[i] = ef[i] * uh[i] + dt * eh[i] * n3[i];
    Spectrum n4 = nl_hat(to_field(sc));

    Spectrum out = Spectrum::zeros(u.grid());
    for (int i = 0; i < n; ++i)
        out[i] = ef[i] * uh[i] +
                 (dt / 6.0) * (ef[i] * n1[i] + 2.0 * eh[i] * (n2[i] + n3[i]) + n4[i]);
    Field result = to_field(out);
    check_stage(result);
    return result;
}

namespace {

// Stepper and stability policy for one model.
struct Scheme {
    std::function<Field(const Field&, double)> step;
    bool drop_stiff_linear;
};

Scheme make_scheme(const SimConfig& cfg) {
    const bool da = cfg.dealias;
    switch (cfg.model.tag) {
        case ModelKind::Tag::Arctan:
            return {[da](const Field& u, double dt) {
                        return step_rk4(u, dt, [da](const Field& v) {
                            return rhs_arctan(v, da);
                        });
                    },
                    false};
        case ModelKind::Tag::ViscousArctan: {
            double nu = cfg.model.nu;
            return {[da, nu](const Field& u, double dt) {
                        return step_ifrk4(
                            u, dt,
                            [nu](int k) { return -nu * static_cast<double>(k) * k; },
                            [da](const Field& v) { return rhs_arctan(v, da); });
                    },
                    false};
        }
        case ModelKind::Tag::Cccf:
            return {[da](const Field& u, double dt) {
                        int n = u.size();
                        return step_ifrk4(
                            u, dt,
                            [n](int k) {
                                return (k == 0 || k == -n / 2)
                                           ? 0.0
                                           : -std::abs(static_cast<double>(k));
                            },
                            [da](const Field& v) { return rhs_cccf_nonlinear(v, da); });
                    },
                    true};
        case ModelKind::Tag::Porous: {
            int m = cfg.model.m;
            return {[da, m](const Field& u, double dt) {
                        return step_rk4(u, dt, [da, m](const Field& v) {
                            return rhs_porous(v, m, da);
                        });
                    },
                    false};
        }
    }
    throw InvalidParameter("unknown model");
}

} // namespace

Trajectory simulate(const SimConfig& config) {
    config.validate();
    PeriodicGrid grid(config.n);
    Field u = config.initial.build(grid);

    const bool positive_model = config.model.requires_positive();
    if (positive_model && !(min_value(u) > 0.0))
        throw ValidationError("initial", "initial data must be strictly positive");
    const double guard = positive_model ? 1e-3 * min_value(u) : 0.0;

    Scheme scheme = make_scheme(config);

    const double t_end = config.t_end;
    const double time_tol = 1e-12 * std::max(1.0, t_end);

    Trajectory traj{config, {}, {}, u, 0.0, RunStatus::Completed};

    // Event grids hit exactly by clamping dt.
    long snap_idx = 1, sym_idx = 1;
    auto next_snap = [&] {
        return config.snap_every > 0.0 ? snap_idx * config.snap_every
                                       : std::numeric_limits<double>::infinity();
    };
    auto next_sym = [&] {
        return config.diag_sym_every > 0.0 ? sym_idx * config.diag_sym_every
                                           : std::numeric_limits<double>::infinity();
    };

    bool sym0 = config.diag_sym_every > 0.0;
    traj.records.push_back(make_record(0.0, u, sym0));
    if (config.snap_every > 0.0) traj.snapshots.emplace_back(0.0, u);

    double t = 0.0;
    while (t < t_end - time_tol) {
        double dt;
        Field u_next = Field::zeros(grid);
        double target = std::min({t_end, next_snap(), next_sym()});
        try {
            dt = stable_dt(u, config.model, config.cfl, t_end - t,
                           scheme.drop_stiff_linear);
            bool land = false;
            if (t + dt >= target - time_tol) {
                dt = target - t;
                land = true;
            }
            u_next = scheme.step(u, dt);
            if (!all_finite(u_next)) throw BlowUpDetected("non-finite state");
            t = land ? target : t + dt;
        } catch (const NonPositiveField&) {
            traj.status = RunStatus::AbortedNonPositive;
            break;
        } catch (const BlowUpDetected&) {
            traj.status = RunStatus::AbortedBlowUp;
            break;
        }
        u = std::move(u_next);
        if (positive_model && min_value(u) <= guard) {
            traj.status = RunStatus::AbortedNonPositive;
            break;
        }

        bool want_sym = false;
        if (std::abs(t - next_snap()) <= time_tol) {
            traj.snapshots.emplace_back(t, u);
            ++snap_idx;
        }
        if (std::abs(t - next_sym()) <= time_tol) {
            want_sym = true;
            ++sym_idx;
        }
        traj.records.push_back(make_record(t, u, want_sym));
        traj.final_field = u;
        traj.end_time = t;
    }
    return traj;
}

} // namespace nltrans
