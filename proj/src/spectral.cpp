#include "nltrans/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace nltrans {

namespace {

// One c2c plan pair per grid size, created lazily. The FFTW planner is
// not thread safe, so creation is serialized; fftw_execute_dft on
// distinct arrays is safe without locking. Plans use FFTW_UNALIGNED so
// they can run on plain std::vector storage.
class PlanCache {
  public:
    struct Pair {
        fftw_plan fwd{nullptr};
        fftw_plan bwd{nullptr};
    };

    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    Pair get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> a(n), b(n);
        Pair p;
        p.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()),
                                 FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()),
                                 FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(n, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<int, Pair> plans_;
};

fftw_complex* raw(std::vector<std::complex<double>>& v) {
    return reinterpret_cast<fftw_complex*>(v.data());
}

} // namespace

Spectrum to_spectrum(const Field& u) {
    if (!all_finite(u)) throw InvalidField("non-finite value in field");
    const int n = u.size();
    std::vector<std::complex<double>> in(n), out(n);
    for (int j = 0; j < n; ++j) in[j] = u[j];
    fftw_execute_dft(PlanCache::instance().get(n).fwd, raw(in), raw(out));
    const double scale = 1.0 / n;
    for (auto& c : out) c *= scale;
    return Spectrum(u.grid(), std::move(out));
}

Field to_field(const Spectrum& s) {
    const int n = s.size();
    std::vector<std::complex<double>> in(s.coeffs().begin(), s.coeffs().end()), out(n);
    fftw_execute_dft(PlanCache::instance().get(n).bwd, raw(in), raw(out));
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = out[j].real();
    return Field(s.grid(), std::move(v));
}

namespace {

// Apply a multiplier m(k) in coefficient space.
template <class M>
Field apply_multiplier(const Field& u, M&& m) {
    Spectrum s = to_spectrum(u);
    const int n = s.size();
    for (int i = 0; i < n; ++i) s[i] *= m(s.wavenumber(i));
    return to_field(s);
}

} // namespace

Field hilbert(const Field& u) {
    const int nyq = -u.size() / 2;
    return apply_multiplier(u, [nyq](int k) -> std::complex<double> {
        if (k == 0 || k == nyq) return 0.0;
        return std::complex<double>(0.0, k > 0 ? -1.0 : 1.0);
    });
}

Field lambda_op(const Field& u) { return fractional_lambda(u, 1.0); }

Field fractional_lambda(const Field& u, double s) {
    if (s == 0.0) return u;
    const int n = u.size();
    Spectrum c = to_spectrum(u);
    if (s < 0.0) {
        double amp = std::max(std::abs(min_value(u)), std::abs(max_value(u)));
        if (std::abs(c.coeff(0)) > 1e-10 * std::max(1.0, amp))
            throw UndefinedInverse("fractional_lambda with s<0 needs zero mean");
    }
    for (int i = 0; i < n; ++i) {
        int k = c.wavenumber(i);
        if (k == 0 || k == -n / 2)
            c[i] = 0.0;
        else
            c[i] *= std::pow(std::abs(static_cast<double>(k)), s);
    }
    return to_field(c);
}

Field derivative(const Field& u) {
    const int nyq = -u.size() / 2;
    return apply_multiplier(u, [nyq](int k) -> std::complex<double> {
        if (k == nyq) return 0.0;
        return std::complex<double>(0.0, static_cast<double>(k));
    });
}

Field second_derivative(const Field& u) {
    return apply_multiplier(u, [](int k) -> std::complex<double> {
        return -static_cast<double>(k) * static_cast<double>(k);
    });
}

Field dealias(const Field& u) {
    const int n = u.size();
    return apply_multiplier(u, [n](int k) -> std::complex<double> {
        return 3 * std::abs(k) > n ? 0.0 : 1.0;
    });
}

Field mollify(const Field& u, double eps) {
    if (eps < 0.0) throw InvalidParameter("mollify needs eps >= 0");
    if (eps == 0.0) return u;
    return apply_multiplier(u, [eps](int k) -> std::complex<double> {
        return std::exp(-eps * static_cast<double>(k) * static_cast<double>(k));
    });
}

} // namespace nltrans
