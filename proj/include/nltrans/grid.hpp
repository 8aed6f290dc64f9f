#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "nltrans/errors.hpp"

namespace nltrans {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on [0, 2*pi): nodes x_j = 2*pi*j/n, j = 0..n-1.
struct PeriodicGrid {
    int n;

    explicit PeriodicGrid(int n_) : n(n_) {
        if (n < 8 || n % 2 != 0)
            throw InvalidParameter("grid size must be even and >= 8, got " +
                                   std::to_string(n_));
    }
    double dx() const { return two_pi / n; }
    double node(int j) const { return two_pi * j / n; }
    bool operator==(const PeriodicGrid&) const = default;
};

/// Real point values at the nodes of a PeriodicGrid. Plain value type,
/// safe to copy and move between threads.
class Field {
  public:
    Field(PeriodicGrid grid, std::vector<double> values)
        : grid_(grid), v_(std::move(values)) {
        if (static_cast<int>(v_.size()) != grid_.n)
            throw InvalidField("field length " + std::to_string(v_.size()) +
                               " does not match grid size " + std::to_string(grid_.n));
    }

    static Field zeros(PeriodicGrid grid) {
        return Field(grid, std::vector<double>(grid.n, 0.0));
    }
    static Field constant(PeriodicGrid grid, double c) {
        return Field(grid, std::vector<double>(grid.n, c));
    }
    template <class F>
    static Field sample(PeriodicGrid grid, F&& f) {
        std::vector<double> v(grid.n);
        for (int j = 0; j < grid.n; ++j) v[j] = f(grid.node(j));
        return Field(grid, std::move(v));
    }

    const PeriodicGrid& grid() const { return grid_; }
    int size() const { return grid_.n; }
    double operator[](int j) const { return v_[j]; }
    double& operator[](int j) { return v_[j]; }
    std::span<const double> values() const { return v_; }
    std::vector<double> values_copy() const { return v_; }

  private:
    PeriodicGrid grid_;
    std::vector<double> v_;
};

inline void require_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()))
        throw InvalidParameter("fields live on different grids");
}

inline Field operator+(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field r = a;
    for (int j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}
inline Field operator-(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field r = a;
    for (int j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}
inline Field operator*(double c, const Field& a) {
    Field r = a;
    for (int j = 0; j < r.size(); ++j) r[j] *= c;
    return r;
}
/// Pointwise product.
inline Field operator*(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field r = a;
    for (int j = 0; j < r.size(); ++j) r[j] *= b[j];
    return r;
}
inline Field operator+(const Field& a, double c) {
    Field r = a;
    for (int j = 0; j < r.size(); ++j) r[j] += c;
    return r;
}

inline double min_value(const Field& u) {
    return *std::min_element(u.values().begin(), u.values().end());
}
inline double max_value(const Field& u) {
    return *std::max_element(u.values().begin(), u.values().end());
}
/// Mean <u> = (1/2pi) * integral of u = plain average of node values.
inline double mean(const Field& u) {
    double s = 0.0;
    for (double x : u.values()) s += x;
    return s / u.size();
}
inline bool all_finite(const Field& u) {
    for (double x : u.values())
        if (!std::isfinite(x)) return false;
    return true;
}
inline double max_abs_diff(const Field& a, const Field& b) {
    require_same_grid(a, b);
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}
/// Grid L2 norm of a-b: sqrt(dx * sum (a_j-b_j)^2).
inline double l2_diff(const Field& a, const Field& b) {
    require_same_grid(a, b);
    double s = 0.0;
    for (int j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(a.grid().dx() * s);
}

} // namespace nltrans
