#pragma once

#include <complex>
#include <vector>

#include "nltrans/grid.hpp"

namespace nltrans {

/// Fourier coefficients of a Field in the convention
///   u(x_j) = sum_{k=-n/2}^{n/2-1} c(k) e^{i k x_j},
/// forward transform c(k) = (1/n) sum_j u(x_j) e^{-i k x_j}.
/// Stored in FFT layout: index i holds k = i for i <= n/2-1, else k = i-n.
class Spectrum {
  public:
    Spectrum(PeriodicGrid grid, std::vector<std::complex<double>> coeffs)
        : grid_(grid), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != grid_.n)
            throw InvalidField("coefficient count does not match grid size");
    }
    static Spectrum zeros(PeriodicGrid grid) {
        return Spectrum(grid, std::vector<std::complex<double>>(grid.n));
    }

    const PeriodicGrid& grid() const { return grid_; }
    int size() const { return grid_.n; }

    /// Wavenumber of storage index i.
    int wavenumber(int i) const { return i <= grid_.n / 2 - 1 ? i : i - grid_.n; }

    /// Coefficient for wavenumber k in [-n/2, n/2-1].
    std::complex<double> coeff(int k) const { return c_[index_of(k)]; }
    void set_coeff(int k, std::complex<double> v) { c_[index_of(k)] = v; }

    std::complex<double> operator[](int i) const { return c_[i]; }
    std::complex<double>& operator[](int i) { return c_[i]; }
    std::span<const std::complex<double>> coeffs() const { return c_; }

  private:
    int index_of(int k) const {
        if (k < -grid_.n / 2 || k > grid_.n / 2 - 1)
            throw InvalidParameter("wavenumber out of range");
        return k >= 0 ? k : k + grid_.n;
    }
    PeriodicGrid grid_;
    std::vector<std::complex<double>> c_;
};

/// Forward transform. Throws InvalidField if any value is not finite.
Spectrum to_spectrum(const Field& u);
/// Inverse transform (real part of the synthesis sum).
Field to_field(const Spectrum& s);

/// Periodic Hilbert transform: multiplier -i*sgn(k), zero mean output.
/// The Nyquist mode k=-n/2 is zeroed (ambiguous sign).
Field hilbert(const Field& u);

/// Zygmund operator Lambda = H d/dx: multiplier |k|.
Field lambda_op(const Field& u);

/// Multiplier |k|^s. s=0 is the identity. For s<0 the input must have
/// zero mean (UndefinedInverse otherwise). Nyquist zeroed for s != 0 so
/// that lambda_op == hilbert(derivative(.)) on arbitrary fields.
Field fractional_lambda(const Field& u, double s);

/// Spectral derivative: multiplier i*k, Nyquist zeroed.
Field derivative(const Field& u);

/// Spectral second derivative: multiplier -k^2 (Nyquist kept; the
/// multiplier is real and unambiguous).
Field second_derivative(const Field& u);

/// 2/3-rule truncation: coefficients with 3|k| > n zeroed. Idempotent.
Field dealias(const Field& u);

/// Heat-kernel smoothing: multiplier e^{-eps k^2}, eps >= 0. Preserves
/// the mean; eps = 0 is the identity.
Field mollify(const Field& u, double eps);

} // namespace nltrans
