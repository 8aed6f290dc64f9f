#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "nltrans/theory.hpp"

using namespace nltrans;
using doctest::Approx;

TEST_CASE("F: endpoints, frozen values, monotonicity") {
    CHECK(eval_F(0.0) == 0.0);
    // direct arithmetic evaluation of the closed form
    CHECK(eval_F(0.17) == Approx(0.960871684764657).epsilon(1e-12));
    CHECK(eval_F(0.17) < 1.0);
    CHECK(eval_F(0.18) == Approx(1.097267926094731).epsilon(1e-12));
    CHECK(eval_F(0.18) > 1.0);

    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        double r = 0.4 * i / 100.0;
        double v = eval_F(r);
        CHECK(v > prev);
        prev = v;
    }

    CHECK_THROWS_AS(eval_F(-0.01), InvalidParameter);
    CHECK_THROWS_AS(eval_F(0.5), InvalidParameter);
}

TEST_CASE("G: endpoints, frozen values, exact unit crossing at 1/4") {
    CHECK(eval_G(0.0) == 0.0);
    CHECK(eval_G(0.24) == Approx(12.0 / 13.0).epsilon(1e-12));
    CHECK(eval_G(0.24) < 1.0);
    CHECK(eval_G(0.25) == Approx(1.0).epsilon(1e-14));

    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        double s = 0.45 * i / 100.0;
        double v = eval_G(s);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(eval_G(0.6), InvalidParameter);
}

TEST_CASE("closed forms agree with the truncated series forms") {
    for (int i = 0; i <= 30; ++i) {
        double r = 0.3 * i / 30.0;
        CHECK(std::abs(eval_F(r) - eval_F_series(r)) <= 1e-10);
        CHECK(std::abs(eval_G(r) - eval_G_series(r)) <= 1e-10);
    }
}

TEST_CASE("rational arithmetic: G(1/4) = 1 and G(6/25) = 12/13 exactly") {
    Rational one(1);
    CHECK(eval_G_rational(Rational(1, 4)) == one);
    CHECK(eval_G_rational(Rational(6, 25)) == Rational(12, 13));
    CHECK(eval_G_rational(Rational(1, 10)).to_double() == Approx(eval_G(0.1)).epsilon(1e-15));

    CHECK(Rational(4, 9) + Rational(1, 3) + Rational(1, 18) + Rational(1, 6) == one);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), InvalidParameter);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0, 5), InvalidParameter);
}

TEST_CASE("threshold brackets the unit crossings") {
    Bracket c = threshold([](double r) { return eval_F(r); }, 1e-6);
    CHECK(c.hi - c.lo <= 1e-6);
    CHECK(c.lo > 0.17);
    CHECK(c.hi < 0.18);
    CHECK(eval_F(c.lo) < 1.0);
    CHECK(eval_F(c.hi) >= 1.0);

    Bracket ct = threshold([](double s) { return eval_G(s); }, 1e-6);
    CHECK(ct.hi - ct.lo <= 1e-6);
    CHECK(ct.lo <= 0.25);
    CHECK(ct.hi >= 0.25 - 1e-6);
    CHECK(std::abs(0.5 * (ct.lo + ct.hi) - 0.25) < 1e-6);
}

TEST_CASE("threshold: halving tol halves the bracket") {
    Bracket a = threshold([](double r) { return eval_F(r); }, 1e-3);
    Bracket b = threshold([](double r) { return eval_F(r); }, 0.5e-3);
    CHECK(b.hi - b.lo == Approx(0.5 * (a.hi - a.lo)).epsilon(1e-9));
}

TEST_CASE("threshold rejects majorants that do not bracket") {
    CHECK_THROWS_AS(threshold([](double) { return 0.0; }, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(threshold([](double) { return 2.0; }, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(threshold([](double r) { return eval_F(r); }, 0.0), InvalidParameter);
}

TEST_CASE("decay-rate fit on synthetic series") {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i <= 10; ++i) {
        double t = 0.5 * i;
        s.emplace_back(t, std::exp(-0.3 * t));
    }
    CHECK(fit_decay_rate(s) == Approx(0.3).epsilon(1e-10));

    std::vector<std::pair<double, double>> flat;
    for (int i = 0; i < 8; ++i) flat.emplace_back(i, 2.0);
    CHECK(fit_decay_rate(flat) == Approx(0.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> pre;
    for (int i = 0; i <= 10; ++i) {
        double t = 0.5 * i;
        pre.emplace_back(t, 2.0 * std::exp(-0.1 * t));
    }
    CHECK(fit_decay_rate(pre) == Approx(0.1).epsilon(1e-10));
}

TEST_CASE("decay-rate fit rejects bad input") {
    std::vector<std::pair<double, double>> two = {{0.0, 1.0}, {1.0, 0.5}};
    CHECK_THROWS_AS(fit_decay_rate(two), InvalidParameter);

    std::vector<std::pair<double, double>> neg = {{0.0, 1.0}, {1.0, -0.5}, {2.0, 0.2}};
    CHECK_THROWS_AS(fit_decay_rate(neg), InvalidParameter);

    std::vector<std::pair<double, double>> unsorted = {{0.0, 1.0}, {2.0, 0.5}, {1.0, 0.2}};
    CHECK_THROWS_AS(fit_decay_rate(unsorted), InvalidParameter);
}
