#include "diagcop/piecewise_linear.hpp"

#include <algorithm>

#include "diagcop/error.hpp"

namespace diagcop {

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points) {
    xs_.reserve(points.size());
    vs_.reserve(points.size());
    for (auto& p : points) {
        xs_.push_back(std::move(p.x));
        vs_.push_back(std::move(p.value));
    }
    finish();
}

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> values)
    : xs_(std::move(xs)), vs_(std::move(values)) {
    finish();
}

void PiecewiseLinear::finish() {
    if (xs_.size() != vs_.size()) throw Error(ErrorCode::Malformed, "breakpoint and value counts differ");
    if (xs_.size() < 2) throw Error(ErrorCode::Malformed, "need at least two breakpoints");
    if (xs_.front() != Rational(0)) throw Error(ErrorCode::Malformed, "first breakpoint must be at x = 0");
    if (xs_.back() != Rational(1)) throw Error(ErrorCode::Malformed, "last breakpoint must be at x = 1");
    slopes_.clear();
    slopes_.reserve(xs_.size() - 1);
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (!(xs_[i] < xs_[i + 1]))
            throw Error(ErrorCode::Malformed, "breakpoints must be strictly increasing (at index " +
                                                  std::to_string(i + 1) + ")");
        slopes_.push_back((vs_[i + 1] - vs_[i]) / (xs_[i + 1] - xs_[i]));
    }
    xs_d_.resize(xs_.size());
    vs_d_.resize(vs_.size());
    std::transform(xs_.begin(), xs_.end(), xs_d_.begin(), [](const Rational& r) { return r.to_double(); });
    std::transform(vs_.begin(), vs_.end(), vs_d_.begin(), [](const Rational& r) { return r.to_double(); });
}

std::size_t PiecewiseLinear::segment_of(const Rational& x) const {
    auto it = std::upper_bound(xs_.begin() + 1, xs_.end() - 1, x);
    return static_cast<std::size_t>(it - xs_.begin()) - 1;
}

std::size_t PiecewiseLinear::segment_of(double x) const {
    auto it = std::upper_bound(xs_d_.begin() + 1, xs_d_.end() - 1, x);
    return static_cast<std::size_t>(it - xs_d_.begin()) - 1;
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1)) throw Error(ErrorCode::OutOfDomain, "x = " + x.str() + " not in [0,1]");
    std::size_t i = segment_of(x);
    if (x == xs_[i]) return vs_[i];
    if (x == xs_[i + 1]) return vs_[i + 1];
    return vs_[i] + slopes_[i] * (x - xs_[i]);
}

double PiecewiseLinear::operator()(double x) const {
    std::size_t i = segment_of(x);
    double t = (x - xs_d_[i]) / (xs_d_[i + 1] - xs_d_[i]);
    return vs_d_[i] + t * (vs_d_[i + 1] - vs_d_[i]);
}

const Rational& PiecewiseLinear::right_slope(const Rational& x) const { return slopes_[segment_of(x)]; }

const Rational& PiecewiseLinear::left_slope(const Rational& x) const {
    std::size_t i = segment_of(x);
    if (i > 0 && x == xs_[i]) return slopes_[i - 1];
    return slopes_[i];
}

PiecewiseLinear PiecewiseLinear::resampled(std::span<const Rational> grid) const {
    std::vector<Rational> vals;
    vals.reserve(grid.size());
    for (const auto& g : grid) vals.push_back((*this)(g));
    return PiecewiseLinear(std::vector<Rational>(grid.begin(), grid.end()), std::move(vals));
}

PiecewiseLinear PiecewiseLinear::simplified() const {
    std::vector<Rational> xs{xs_.front()}, vs{vs_.front()};
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
        if (slopes_[i - 1] != slopes_[i]) {
            xs.push_back(xs_[i]);
            vs.push_back(vs_[i]);
        }
    }
    xs.push_back(xs_.back());
    vs.push_back(vs_.back());
    return PiecewiseLinear(std::move(xs), std::move(vs));
}

std::vector<Rational> merge_grids(std::span<const Rational> a, std::span<const Rational> b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

template <typename Op>
PiecewiseLinear combine(const PiecewiseLinear& a, const PiecewiseLinear& b, Op op) {
    auto grid = merge_grids(a.xs(), b.xs());
    std::vector<Rational> vals;
    vals.reserve(grid.size());
    for (const auto& g : grid) vals.push_back(op(a(g), b(g)));
    return PiecewiseLinear(std::move(grid), std::move(vals));
}

}  // namespace

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return combine(a, b, [](const Rational& u, const Rational& v) { return u + v; });
}

PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return combine(a, b, [](const Rational& u, const Rational& v) { return u - v; });
}

PiecewiseLinear operator*(const Rational& c, const PiecewiseLinear& a) {
    std::vector<Rational> vals(a.values().begin(), a.values().end());
    for (auto& v : vals) v *= c;
    return PiecewiseLinear(std::vector<Rational>(a.xs().begin(), a.xs().end()), std::move(vals));
}

PiecewiseLinear identity_pl() { return PiecewiseLinear({Rational(0), Rational(1)}, {Rational(0), Rational(1)}); }

Rational sup_distance(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    Rational best(0);
    for (const auto& g : merge_grids(a.xs(), b.xs())) best = max(best, abs(a(g) - b(g)));
    return best;
}

}  // namespace diagcop
