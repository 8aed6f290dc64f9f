#pragma once

#include <functional>
#include <span>
#include <utility>

#include "nltrans/errors.hpp"

namespace nltrans {

/// Stability majorant for the A^1 smallness condition. Domain [0, 1/2).
double eval_F(double r);

/// A priori majorant for the A^0 smallness condition. Domain [0, 1/2).
double eval_G(double s);

/// Same expressions with every geometric sum replaced by a truncated
/// power series; cross-check oracles for the closed forms.
double eval_F_series(double r, int terms = 200);
double eval_G_series(double s, int terms = 200);

/// Minimal exact fraction type for evaluating G at rational points.
struct Rational {
    long long num{0};
    long long den{1};
    Rational() = default;
    Rational(long long n, long long d = 1);
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    double to_double() const { return static_cast<double>(num) / den; }
};

/// G evaluated in exact rational arithmetic; G(1/4) = 1 exactly.
Rational eval_G_rational(const Rational& s);

struct Bracket {
    double lo;
    double hi;
};

/// Bisection bracket for the crossing majorant(c) = 1 on [0, 0.45]:
/// returns [lo, hi] with hi-lo <= tol, majorant(lo) < 1 <= majorant(hi).
Bracket threshold(const std::function<double(double)>& majorant, double tol);

/// Least-squares exponential rate: slope of -log(value) against t.
/// Drops the leading drop_fraction of samples (transient) while keeping
/// at least three. Values must be positive, times increasing.
double fit_decay_rate(std::span<const std::pair<double, double>> series,
                      double drop_fraction = 0.1);

} // namespace nltrans
