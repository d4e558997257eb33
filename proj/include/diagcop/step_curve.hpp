#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "diagcop/rational.hpp"

namespace diagcop {

struct Affine {
    Rational slope;
    Rational intercept;

    Rational operator()(const Rational& x) const { return slope * x + intercept; }
};

/// A function on [0, 1] that is affine on each open interval between
/// consecutive nodes and takes an independent value at every node, so jumps
/// of either continuity type are represented exactly.
class StepCurve {
public:
    using PointFn = std::function<Rational(const Rational&)>;

    StepCurve() = default;
    StepCurve(std::vector<Rational> nodes, std::vector<Rational> values, std::vector<Affine> pieces);

    /// Fits one affine piece per open interval from samples of fn at interior
    /// points. fn must be affine on every such interval; a third sample
    /// guards that assumption.
    static std::vector<Affine> fit_pieces(std::span<const Rational> nodes, const PointFn& fn);

    std::size_t size() const noexcept { return nodes_.size(); }
    const Rational& node(std::size_t i) const { return nodes_[i]; }
    const Rational& node_value(std::size_t i) const { return values_[i]; }
    const Affine& piece(std::size_t i) const { return pieces_[i]; }
    std::span<const Rational> nodes() const noexcept { return nodes_; }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    /// One-sided limits; at 0 (resp. 1) the missing side returns the value.
    Rational left_limit(const Rational& x) const;
    Rational right_limit(const Rational& x) const;

    struct Jump {
        Rational x, left, value, right;
    };

    /// Nodes where the value or a one-sided limit disagree.
    std::vector<Jump> jumps() const;

    /// Points strictly inside an interval where a non-constant piece meets
    /// one of the sorted levels.
    std::vector<Rational> level_crossings(std::span<const Rational> sorted_levels) const;

private:
    // index of the node equal to x, or of the open interval containing x
    std::pair<std::size_t, bool> locate(const Rational& x) const;

    std::vector<Rational> nodes_;
    std::vector<Rational> values_;
    std::vector<Affine> pieces_;
    std::vector<double> nodes_d_;
    std::vector<double> values_d_;
    std::vector<std::pair<double, double>> pieces_d_;
};

/// Sorted, deduplicated copy of xs.
std::vector<Rational> sorted_unique(std::vector<Rational> xs);

}  // namespace diagcop
