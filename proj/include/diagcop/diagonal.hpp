#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "diagcop/piecewise_linear.hpp"

namespace diagcop {

/// A function delta on [0, 1] that is the diagonal section of some copula:
/// delta(0) = 0, delta(1) = 1, delta(x) <= x and every slope in [0, 2].
class DiagonalSection {
public:
    /// Validates exactly at breakpoints and segments; throws Error with
    /// EndpointMismatch, ViolatesBound or SlopeOutOfRange.
    static DiagonalSection validate(PiecewiseLinear pl, std::string provenance = {});

    /// delta_M(x) = x, the diagonal of the comonotone copula.
    static DiagonalSection identity();

    const PiecewiseLinear& pl() const noexcept { return pl_; }
    const std::string& provenance() const noexcept { return provenance_; }

    Rational operator()(const Rational& x) const { return pl_(x); }
    double operator()(double x) const { return pl_(x); }

    /// True iff delta(x) = x everywhere.
    bool is_identity() const;

private:
    DiagonalSection(PiecewiseLinear pl, std::string provenance)
        : pl_(std::move(pl)), provenance_(std::move(provenance)) {}

    PiecewiseLinear pl_;
    std::string provenance_;
};

inline DiagonalSection validate_diagonal(PiecewiseLinear pl, std::string provenance = {}) {
    return DiagonalSection::validate(std::move(pl), std::move(provenance));
}

enum class Extreme { Min, Max };

struct Extremum {
    Rational value;
    Rational at;  // smallest point attaining value
};

/// delta-hat(x) = x - delta(x), together with the prefix total variation
/// x -> TV_0^x(delta-hat) and range tables over breakpoint values so that
/// interval extrema cost O(log n).
class DeltaHat {
public:
    explicit DeltaHat(const DiagonalSection& d);

    const PiecewiseLinear& pl() const noexcept { return pl_; }
    const PiecewiseLinear& tv_prefix() const noexcept { return tv_; }

    Rational operator()(const Rational& x) const { return pl_(x); }
    double operator()(double x) const { return pl_(x); }

    /// Signed total variation TV_x^y; negative when y < x.
    Rational total_variation(const Rational& x, const Rational& y) const;

    /// Exact min or max of delta-hat over [lo, hi]; requires lo <= hi.
    Extremum extremum(const Rational& lo, const Rational& hi, Extreme which) const;

    /// Min or max over breakpoints with index in [first, last]; ties broken
    /// toward the smallest index. Returns the index.
    std::size_t breakpoint_extremum(std::size_t first, std::size_t last, Extreme which) const;

    /// delta-hat vanishes identically, i.e. delta = delta_M.
    bool is_zero() const noexcept { return zero_; }

private:
    PiecewiseLinear pl_;
    PiecewiseLinear tv_;
    std::vector<std::vector<std::size_t>> min_table_;
    std::vector<std::vector<std::size_t>> max_table_;
    bool zero_ = true;
};

inline DeltaHat delta_hat(const DiagonalSection& d) { return DeltaHat(d); }

inline Rational total_variation(const DeltaHat& dh, const Rational& x, const Rational& y) {
    return dh.total_variation(x, y);
}

inline Extremum extremum_on_interval(const DeltaHat& dh, const Rational& x, const Rational& y, Extreme which) {
    return dh.extremum(x, y, which);
}

/// delta_n = delta - phi_n, where phi_n is a zigzag with slopes +-1 and n teeth
/// on every maximal run of slope-1 segments of delta. The result has slope 0
/// or 2 throughout the perturbed runs and ||delta_n - delta|| <= (b - a) / (2n)
/// for a run [a, b]. Throws NoSlopeOneSegment when delta has no such run.
DiagonalSection zigzag_perturb(const DiagonalSection& d, int n);

// ---------------------------------------------------------------------------
// .diag text files: '#' comment lines, one "x value" breakpoint per line, each
// token either "p/q" or a decimal literal (converted exactly).

PiecewiseLinear read_diag(std::istream& in);
PiecewiseLinear load_diag(const std::string& path);
void write_diag(std::ostream& out, const DiagonalSection& d);

}  // namespace diagcop
