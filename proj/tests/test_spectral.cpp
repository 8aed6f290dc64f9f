#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "nltrans/spectral.hpp"
#include "test_support.hpp"

using namespace nltrans;
using doctest::Approx;

namespace {
Field cosk(PeriodicGrid g, int k, double a = 1.0) {
    return Field::sample(g, [=](double x) { return a * std::cos(k * x); });
}
Field sink(PeriodicGrid g, int k, double a = 1.0) {
    return Field::sample(g, [=](double x) { return a * std::sin(k * x); });
}
} // namespace

TEST_CASE("transform of constants and single modes") {
    PeriodicGrid g(16);
    Spectrum c1 = to_spectrum(Field::constant(g, 1.0));
    CHECK(std::abs(c1.coeff(0) - 1.0) < 1e-14);
    for (int k = -8; k < 8; ++k)
        if (k != 0) CHECK(std::abs(c1.coeff(k)) < 1e-14);

    Spectrum cc = to_spectrum(cosk(g, 1));
    CHECK(std::abs(cc.coeff(1) - 0.5) < 1e-14);
    CHECK(std::abs(cc.coeff(-1) - 0.5) < 1e-14);
    CHECK(std::abs(cc.coeff(2)) < 1e-14);
}

TEST_CASE("round trip is exact on band-limited data") {
    PeriodicGrid g(16);
    Field u = Field::sample(g, [](double x) { return 1.0 + 0.5 * std::cos(x); });
    Field back = to_field(to_spectrum(u));
    CHECK(max_abs_diff(u, back) < 1e-12);
}

TEST_CASE("round trip and Parseval on random fields") {
    std::mt19937 rng(11);
    for (int n : {8, 64, 256}) {
        PeriodicGrid g(n);
        Field u = testsup::random_band_limited(g, rng, n / 3, 1.0, 0.7);
        Field back = to_field(to_spectrum(u));
        CHECK(max_abs_diff(u, back) < 1e-12);

        // integral of u^2 == 2pi sum |c_k|^2
        double quad = 0.0;
        for (double x : u.values()) quad += x * x;
        quad *= g.dx();
        Spectrum c = to_spectrum(u);
        double par = 0.0;
        for (int i = 0; i < n; ++i) par += std::norm(c[i]);
        par *= two_pi;
        CHECK(std::abs(quad - par) < 1e-12 * quad);
    }
}

TEST_CASE("hermitian symmetry of real-field spectra") {
    std::mt19937 rng(12);
    PeriodicGrid g(64);
    Field u = testsup::random_band_limited(g, rng, 20, 1.0, 0.0);
    Spectrum c = to_spectrum(u);
    for (int k = 1; k < 32; ++k)
        CHECK(std::abs(c.coeff(-k) - std::conj(c.coeff(k))) < 1e-13);
}

TEST_CASE("transform rejects non-finite values") {
    PeriodicGrid g(8);
    std::vector<double> v(8, 1.0);
    v[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(to_spectrum(Field(g, v)), InvalidField);
}

TEST_CASE("hilbert on basic waves") {
    PeriodicGrid g(64);
    CHECK(max_abs_diff(hilbert(cosk(g, 1)), sink(g, 1)) < 1e-13);
    CHECK(max_abs_diff(hilbert(Field::constant(g, 3.0)), Field::zeros(g)) < 1e-13);
    CHECK(max_abs_diff(hilbert(sink(g, 3)), cosk(g, 3, -1.0)) < 1e-13);
}

TEST_CASE("hilbert output has zero mean and H(Hu) = -(u - mean)") {
    std::mt19937 rng(13);
    for (int n : {8, 128, 1024}) {
        PeriodicGrid g(n);
        Field u = testsup::random_band_limited(g, rng, std::min(20, n / 2 - 1), 1.0, 0.4);
        Field Hu = hilbert(u);
        CHECK(std::abs(mean(Hu)) < 1e-13);
        Field HHu = hilbert(Hu);
        Field want = -1.0 * (u + (-mean(u)));
        CHECK(max_abs_diff(HHu, want) < 1e-10);
    }
}

TEST_CASE("lambda on basic waves") {
    PeriodicGrid g(64);
    CHECK(max_abs_diff(lambda_op(cosk(g, 2)), cosk(g, 2, 2.0)) < 1e-13);
    CHECK(max_abs_diff(lambda_op(Field::constant(g, 2.0)), Field::zeros(g)) < 1e-13);
}

TEST_CASE("fractional lambda: multipliers |k|^s") {
    PeriodicGrid g(64);
    // sqrt(Lambda)(sin x + cos 4x) = sin x + 2 cos 4x
    Field u = sink(g, 1) + cosk(g, 4);
    Field want = sink(g, 1) + cosk(g, 4, 2.0);
    CHECK(max_abs_diff(fractional_lambda(u, 0.5), want) < 1e-13);

    // s = 0 is the identity
    CHECK(max_abs_diff(fractional_lambda(u, 0.0), u) < 1e-15);

    // negative order inverts positive order on mean-zero input
    Field inv = fractional_lambda(fractional_lambda(u, 1.5), -1.5);
    CHECK(max_abs_diff(inv, u) < 1e-12);
}

TEST_CASE("fractional lambda with s<0 rejects nonzero mean") {
    PeriodicGrid g(32);
    Field u = Field::constant(g, 1.0) + cosk(g, 1);
    CHECK_THROWS_AS(fractional_lambda(u, -0.5), UndefinedInverse);
}

TEST_CASE("lambda equals both operator orderings on arbitrary fields") {
    std::mt19937 rng(14);
    for (int n : {64, 256, 1024}) {
        PeriodicGrid g(n);
        // includes content up to the grid limit, not band-limited below Nyquist
        std::vector<double> v(n);
        std::normal_distribution<double> d(0.0, 1.0);
        for (auto& x : v) x = d(rng);
        Field u(g, v);
        Field a = lambda_op(u);
        Field b = hilbert(derivative(u));
        Field c = derivative(hilbert(u));
        CHECK(max_abs_diff(a, b) < 1e-10);
        CHECK(max_abs_diff(a, c) < 1e-10);
    }
}

TEST_CASE("derivative on basic waves") {
    PeriodicGrid g(64);
    CHECK(max_abs_diff(derivative(sink(g, 1)), cosk(g, 1)) < 1e-13);
    CHECK(max_abs_diff(derivative(Field::constant(g, 5.0)), Field::zeros(g)) < 1e-13);
    CHECK(max_abs_diff(derivative(cosk(g, 3)), sink(g, 3, -3.0)) < 1e-13);
    std::mt19937 rng(15);
    Field u = testsup::random_band_limited(g, rng, 10, 1.0, 0.2);
    CHECK(std::abs(mean(derivative(u))) < 1e-14);
}

TEST_CASE("dealias truncates above n/3 and is idempotent") {
    PeriodicGrid g(16);
    CHECK(max_abs_diff(dealias(cosk(g, 7)), Field::zeros(g)) < 1e-13);
    CHECK(max_abs_diff(dealias(cosk(g, 2)), cosk(g, 2)) < 1e-13);
    std::mt19937 rng(16);
    std::vector<double> v(16);
    std::normal_distribution<double> d(0.0, 1.0);
    for (auto& x : v) x = d(rng);
    Field u(g, v);
    Field once = dealias(u);
    CHECK(max_abs_diff(dealias(once), once) < 1e-13);
}

TEST_CASE("mollify: identity at eps=0, mode damping, mean preserved") {
    PeriodicGrid g(32);
    Field u = Field::constant(g, 0.7) + cosk(g, 1);
    CHECK(max_abs_diff(mollify(u, 0.0), u) == 0.0);
    CHECK(max_abs_diff(mollify(cosk(g, 1), 1.0), cosk(g, 1, std::exp(-1.0))) < 1e-13);

    std::mt19937 rng(17);
    Field w = testsup::random_band_limited(g, rng, 10, 1.0, 0.3);
    for (double eps : {0.01, 0.3, 2.0})
        CHECK(mean(mollify(w, eps)) == Approx(mean(w)).epsilon(1e-13));

    CHECK_THROWS_AS(mollify(u, -0.1), InvalidParameter);
}

TEST_CASE("multiplier lambda matches the singular-integral quadrature") {
    PeriodicGrid g(256);
    Field u = Field::sample(g, [](double x) {
        return 1.0 + 0.3 * std::cos(x) + 0.1 * std::sin(2.0 * x);
    });
    Field quad = testsup::lambda_singular_quadrature(u);
    Field mult = lambda_op(u);
    CHECK(testsup::rel_l2_error(quad, mult) < 1e-3);
}

TEST_CASE("grid construction rejects odd or tiny n") {
    CHECK_THROWS_AS(PeriodicGrid(7), InvalidParameter);
    CHECK_THROWS_AS(PeriodicGrid(6), InvalidParameter);
    CHECK_NOTHROW(PeriodicGrid(8));
}
