#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diagcop/rational.hpp"

namespace diagcop {

struct Breakpoint {
    Rational x;
    Rational value;
};

/// Continuous piecewise-linear function on [0, 1] with exact rational
/// breakpoints. The first breakpoint sits at 0, the last at 1, abscissae
/// strictly increase; values between breakpoints are linearly interpolated.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<Breakpoint> points);
    PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> values);

    std::size_t size() const noexcept { return xs_.size(); }
    std::size_t segments() const noexcept { return xs_.size() - 1; }

    const Rational& x(std::size_t i) const { return xs_[i]; }
    const Rational& value(std::size_t i) const { return vs_[i]; }
    std::span<const Rational> xs() const noexcept { return xs_; }
    std::span<const Rational> values() const noexcept { return vs_; }

    /// Slope of segment i, i.e. between breakpoints i and i + 1.
    const Rational& slope(std::size_t i) const { return slopes_[i]; }

    /// Index of the segment containing x: the largest i < segments() with x(i) <= x.
    std::size_t segment_of(const Rational& x) const;
    std::size_t segment_of(double x) const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    /// Slope immediately to the right of x (the last segment's slope at x = 1).
    const Rational& right_slope(const Rational& x) const;
    /// Slope immediately to the left of x (the first segment's slope at x = 0).
    const Rational& left_slope(const Rational& x) const;

    /// Interpolant of this function on another grid (0 and 1 included,
    /// strictly increasing). Exact iff the grid contains every breakpoint.
    PiecewiseLinear resampled(std::span<const Rational> grid) const;

    /// Drops interior breakpoints where the slope does not change.
    PiecewiseLinear simplified() const;

    friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
        return a.xs_ == b.xs_ && a.vs_ == b.vs_;
    }

private:
    void finish();

    std::vector<Rational> xs_;
    std::vector<Rational> vs_;
    std::vector<Rational> slopes_;
    std::vector<double> xs_d_;
    std::vector<double> vs_d_;
};

/// Sorted union of two breakpoint grids.
std::vector<Rational> merge_grids(std::span<const Rational> a, std::span<const Rational> b);

/// Pointwise a + b on the union grid.
PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b);
/// Pointwise a - b on the union grid.
PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b);
/// Pointwise c * a.
PiecewiseLinear operator*(const Rational& c, const PiecewiseLinear& a);

/// The identity x -> x on [0, 1].
PiecewiseLinear identity_pl();

/// max |a(x) - b(x)| over [0, 1], attained at a breakpoint of either function.
Rational sup_distance(const PiecewiseLinear& a, const PiecewiseLinear& b);

}  // namespace diagcop
