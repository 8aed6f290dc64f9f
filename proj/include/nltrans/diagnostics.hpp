#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nltrans/spectral.hpp"

namespace nltrans {

struct BasicStats {
    double mass;  // integral of u over [0, 2pi)
    double l2sq;  // integral of u^2
    double min;
    double max;
};

/// Trapezoid quadrature (spectrally exact on periodic grids) plus grid extrema.
BasicStats basic_stats(const Field& u);

/// Wiener-type norm: sum over k of |k|^s |c(k)|. For s = 0 the k = 0 term
/// counts with weight 1.
double wiener_norm(const Field& u, double s);

/// Sobolev norm sqrt(2pi * sum |k|^{2s} |c(k)|^2); s = 0 reduces to the L2 norm.
double sobolev_norm(const Field& u, double s);

/// Dissipation functional in local form: (1/2) * integral of
/// Lambda(u) * log(u^2 + (Hu)^2). Requires min(u) > 0.
double dissipation_local(const Field& u);

/// Equivalent local form, - integral of
/// [u u_x Hu - u^2 Lambda(u)] / (u^2 + (Hu)^2); cross-check for the above.
double dissipation_local_alt(const Field& u);

/// Symmetric double-integral form, O(n^2): prefactor 1/(16pi), kernel
/// 1/sin^2((x-y)/2), weight log of the squared-modulus quotient. The
/// diagonal is replaced by its analytic limit 4 u'(x) d/dx log(u^2+(Hu)^2).
double dissipation_symmetric(const Field& u);

/// E(u) = 1/min(u) + ||u||_{H2}, with ||u||_{H2} = sqrt(||u||_{L2}^2 +
/// ||Lambda^2 u||_{L2}^2). Requires min(u) > 0.
double energy_functional(const Field& u);

/// One time slice of every tracked scalar. a0/a1/hhalf are norms of
/// u - <u>. d_local and energy need min(u) > 0 and are omitted otherwise;
/// d_sym is computed only on request (O(n^2)).
struct DiagnosticsRecord {
    double t{};
    double mass{};
    double l2sq{};
    double min{};
    double max{};
    double a0{};
    double a1{};
    double hhalf{};
    std::optional<double> d_local;
    std::optional<double> d_sym;
    std::optional<double> energy;
};

DiagnosticsRecord make_record(double t, const Field& u, bool with_symmetric = false);

/// CSV serialization. Fixed column order; absent optionals are empty cells.
std::string csv_header();
std::string to_csv_row(const DiagnosticsRecord& r);
DiagnosticsRecord record_from_csv_row(std::string_view row);

} // namespace nltrans
