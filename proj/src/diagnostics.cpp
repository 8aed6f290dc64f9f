#include "nltrans/diagnostics.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace nltrans {

BasicStats basic_stats(const Field& u) {
    const double dx = u.grid().dx();
    double s = 0.0, s2 = 0.0;
    for (double x : u.values()) {
        s += x;
        s2 += x * x;
    }
    return BasicStats{dx * s, dx * s2, min_value(u), max_value(u)};
}

double wiener_norm(const Field& u, double s) {
    Spectrum c = to_spectrum(u);
    double sum = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        int k = c.wavenumber(i);
        double w = (k == 0) ? (s == 0.0 ? 1.0 : 0.0)
                            : std::pow(std::abs(static_cast<double>(k)), s);
        sum += w * std::abs(c[i]);
    }
    return sum;
}

double sobolev_norm(const Field& u, double s) {
    Spectrum c = to_spectrum(u);
    double sum = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        int k = c.wavenumber(i);
        double w = (k == 0) ? (s == 0.0 ? 1.0 : 0.0)
                            : std::pow(std::abs(static_cast<double>(k)), 2.0 * s);
        sum += w * std::norm(c[i]);
    }
    return std::sqrt(two_pi * sum);
}

namespace {

void require_positive(const Field& u, const char* what) {
    if (min_value(u) <= 0.0)
        throw NonPositiveField(std::string(what) + " requires min(u) > 0");
}

} // namespace

double dissipation_local(const Field& u) {
    require_positive(u, "dissipation_local");
    Field Hu = hilbert(u);
    Field Lu = lambda_op(u);
    const double dx = u.grid().dx();
    double s = 0.0;
    for (int j = 0; j < u.size(); ++j)
        s += Lu[j] * std::log(u[j] * u[j] + Hu[j] * Hu[j]);
    return 0.5 * dx * s;
}

double dissipation_local_alt(const Field& u) {
    require_positive(u, "dissipation_local_alt");
    Field Hu = hilbert(u);
    Field Lu = lambda_op(u);
    Field ux = derivative(u);
    const double dx = u.grid().dx();
    double s = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        double q = u[j] * u[j] + Hu[j] * Hu[j];
        s += (u[j] * ux[j] * Hu[j] - u[j] * u[j] * Lu[j]) / q;
    }
    return -dx * s;
}

double dissipation_symmetric(const Field& u) {
    require_positive(u, "dissipation_symmetric");
    const int n = u.size();
    const double dx = u.grid().dx();
    Field Hu = hilbert(u);
    Field Lu = lambda_op(u);
    Field ux = derivative(u);

    std::vector<double> logq(n), dlogq(n), x(n);
    for (int j = 0; j < n; ++j) {
        double q = u[j] * u[j] + Hu[j] * Hu[j];
        logq[j] = std::log(q);
        dlogq[j] = (2.0 * u[j] * ux[j] + 2.0 * Hu[j] * Lu[j]) / q;
        x[j] = u.grid().node(j);
    }

    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
            if (l == j) {
                // limit of the integrand as y -> x
                sum += 4.0 * ux[j] * dlogq[j];
            } else {
                double s2 = std::sin(0.5 * (x[j] - x[l]));
                sum += (u[j] - u[l]) * (logq[j] - logq[l]) / (s2 * s2);
            }
        }
    }
    return dx * dx * sum / (16.0 * std::numbers::pi);
}

double energy_functional(const Field& u) {
    require_positive(u, "energy_functional");
    BasicStats st = basic_stats(u);
    double h2dot = sobolev_norm(u, 2.0); // ||Lambda^2 u||, mean mode drops out
    return 1.0 / st.min + std::sqrt(st.l2sq + h2dot * h2dot);
}

DiagnosticsRecord make_record(double t, const Field& u, bool with_symmetric) {
    DiagnosticsRecord r;
    r.t = t;
    BasicStats st = basic_stats(u);
    r.mass = st.mass;
    r.l2sq = st.l2sq;
    r.min = st.min;
    r.max = st.max;

    Spectrum c = to_spectrum(u);
    double a0 = 0.0, a1 = 0.0, hh = 0.0, s4 = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        int k = c.wavenumber(i);
        if (k == 0) continue;
        double ak = std::abs(c[i]);
        double kk = std::abs(static_cast<double>(k));
        a0 += ak;
        a1 += kk * ak;
        hh += kk * ak * ak;
        s4 += kk * kk * kk * kk * ak * ak;
    }
    r.a0 = a0;
    r.a1 = a1;
    r.hhalf = std::sqrt(two_pi * hh);

    if (st.min > 0.0) {
        r.d_local = dissipation_local(u);
        r.energy = 1.0 / st.min + std::sqrt(st.l2sq + two_pi * s4);
        if (with_symmetric) r.d_sym = dissipation_symmetric(u);
    }
    return r;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

} // namespace

std::string csv_header() {
    return "t,mass,l2sq,min,max,a0,a1,hhalf,d_local,d_sym,energy";
}

std::string to_csv_row(const DiagnosticsRecord& r) {
    return fmt(r.t) + "," + fmt(r.mass) + "," + fmt(r.l2sq) + "," + fmt(r.min) + "," +
           fmt(r.max) + "," + fmt(r.a0) + "," + fmt(r.a1) + "," + fmt(r.hhalf) + "," +
           fmt(r.d_local) + "," + fmt(r.d_sym) + "," + fmt(r.energy);
}

DiagnosticsRecord record_from_csv_row(std::string_view row) {
    std::vector<std::string_view> cells;
    size_t start = 0;
    while (true) {
        size_t pos = row.find(',', start);
        cells.push_back(row.substr(start, pos == std::string_view::npos
                                              ? std::string_view::npos
                                              : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (cells.size() != 11) throw ParseError("diagnostics row needs 11 cells");

    auto num = [](std::string_view s) {
        double v{};
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw ParseError("bad numeric cell in diagnostics row");
        return v;
    };
    auto opt = [&](std::string_view s) {
        return s.empty() ? std::optional<double>{} : std::optional<double>{num(s)};
    };

    DiagnosticsRecord r;
    r.t = num(cells[0]);
    r.mass = num(cells[1]);
    r.l2sq = num(cells[2]);
    r.min = num(cells[3]);
    r.max = num(cells[4]);
    r.a0 = num(cells[5]);
    r.a1 = num(cells[6]);
    r.hhalf = num(cells[7]);
    r.d_local = opt(cells[8]);
    r.d_sym = opt(cells[9]);
    r.energy = opt(cells[10]);
    return r;
}

} // namespace nltrans
