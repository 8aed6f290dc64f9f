#include "nltrans/theory.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace nltrans {

namespace {

void check_domain(double r, const char* what) {
    if (!(r >= 0.0) || !(r < 0.5))
        throw InvalidParameter(std::string(what) + " needs an argument in [0, 1/2)");
}

} // namespace

double eval_F(double r) {
    check_domain(r, "eval_F");
    const double q = r / (1.0 - r); // < 1 on the domain
    const double q2 = q * q;
    const double om = 1.0 - r;
    return 2.0 * q / ((1.0 - q2) * (1.0 - q2)) *
               (r / std::pow(om, 3) + r / std::pow(om, 4)) +
           q2 / (1.0 - 2.0 * r) +
           2.0 * q2 / (1.0 - q2) / std::pow(om, 3) +
           q + r / (om * om);
}

double eval_G(double s) {
    check_domain(s, "eval_G");
    const double p = s / (1.0 - s);
    const double geo = p * p / (1.0 - p * p);
    const double om = 1.0 - s;
    return s / (om * om) + s / om + s / (om * om) * geo + geo / om;
}

double eval_F_series(double r, int terms) {
    check_domain(r, "eval_F_series");
    const double q = r / (1.0 - r);
    const double om = 1.0 - r;
    // truncated sum q^2/(1-q^2) = sum q^{2m} and 2q/(1-q^2)^2 = sum 2m q^{2m-1}
    double g1 = 0.0, g2 = 0.0;
    for (int m = terms; m >= 1; --m) {
        g1 += std::pow(q, 2 * m);
        g2 += 2.0 * m * std::pow(q, 2 * m - 1);
    }
    return g2 * (r / std::pow(om, 3) + r / std::pow(om, 4)) +
           g1 / (om * om) +
           2.0 * g1 / std::pow(om, 3) +
           q + r / (om * om);
}

double eval_G_series(double s, int terms) {
    check_domain(s, "eval_G_series");
    const double p = s / (1.0 - s);
    const double om = 1.0 - s;
    double geo = 0.0;
    for (int m = terms; m >= 1; --m) geo += std::pow(p, 2 * m);
    return s / (om * om) + s / om + s / (om * om) * geo + geo / om;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw InvalidParameter("rational division by zero");
    return Rational(num * o.den, den * o.num);
}

Rational eval_G_rational(const Rational& s) {
    const Rational one(1);
    Rational om = one - s;
    Rational p = s / om;
    Rational geo = p * p / (one - p * p);
    return s / (om * om) + s / om + s / (om * om) * geo + geo / om;
}

Bracket threshold(const std::function<double(double)>& majorant, double tol) {
    if (!(tol > 0.0)) throw InvalidParameter("threshold needs tol > 0");
    double lo = 0.0, hi = 0.45;
    if (!(majorant(lo) < 1.0) || !(majorant(hi) > 1.0))
        throw InvalidParameter("majorant does not bracket the crossing on [0, 0.45]");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (majorant(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

double fit_decay_rate(std::span<const std::pair<double, double>> series,
                      double drop_fraction) {
    if (series.size() < 3)
        throw InvalidParameter("fit_decay_rate needs at least 3 samples");
    if (!(drop_fraction >= 0.0) || drop_fraction >= 1.0)
        throw InvalidParameter("drop_fraction must lie in [0, 1)");
    for (size_t i = 0; i < series.size(); ++i) {
        if (!(series[i].second > 0.0))
            throw InvalidParameter("fit_decay_rate needs positive values");
        if (i > 0 && !(series[i].first > series[i - 1].first))
            throw InvalidParameter("fit_decay_rate needs increasing times");
    }
    size_t drop = static_cast<size_t>(drop_fraction * series.size());
    if (series.size() - drop < 3) drop = series.size() - 3;

    double st = 0.0, sy = 0.0;
    const size_t m = series.size() - drop;
    for (size_t i = drop; i < series.size(); ++i) {
        st += series[i].first;
        sy += -std::log(series[i].second);
    }
    const double tbar = st / m, ybar = sy / m;
    double cov = 0.0, var = 0.0;
    for (size_t i = drop; i < series.size(); ++i) {
        double dt = series[i].first - tbar;
        cov += dt * (-std::log(series[i].second) - ybar);
        var += dt * dt;
    }
    return cov / var;
}

} // namespace nltrans
