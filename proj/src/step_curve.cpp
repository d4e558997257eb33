#include "diagcop/step_curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "diagcop/error.hpp"

namespace diagcop {

StepCurve::StepCurve(std::vector<Rational> nodes, std::vector<Rational> values, std::vector<Affine> pieces)
    : nodes_(std::move(nodes)), values_(std::move(values)), pieces_(std::move(pieces)) {
    if (nodes_.size() < 2 || values_.size() != nodes_.size() || pieces_.size() + 1 != nodes_.size())
        throw std::logic_error("inconsistent step curve data");
    for (const auto& n : nodes_) nodes_d_.push_back(n.to_double());
    for (const auto& v : values_) values_d_.push_back(v.to_double());
    for (const auto& p : pieces_) pieces_d_.emplace_back(p.slope.to_double(), p.intercept.to_double());
}

std::vector<Affine> StepCurve::fit_pieces(std::span<const Rational> nodes, const PointFn& fn) {
    std::vector<Affine> out;
    out.reserve(nodes.size() - 1);
    const Rational three(3);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto& a = nodes[i];
        Rational w = nodes[i + 1] - a;
        Rational t1 = a + w / three, t2 = a + w * Rational(2) / three;
        Rational v1 = fn(t1), v2 = fn(t2);
        Rational slope = (v2 - v1) / (t2 - t1);
        Affine piece{slope, v1 - slope * t1};
        Rational mid = a + half(w);
        if (piece(mid) != fn(mid))
            throw std::logic_error("curve is not affine on (" + a.str() + ", " + nodes[i + 1].str() + ")");
        out.push_back(std::move(piece));
    }
    return out;
}

std::pair<std::size_t, bool> StepCurve::locate(const Rational& x) const {
    if (x < nodes_.front() || x > nodes_.back()) throw Error(ErrorCode::OutOfDomain, "x = " + x.str());
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    auto i = static_cast<std::size_t>(it - nodes_.begin());
    if (*it == x) return {i, true};
    return {i - 1, false};
}

Rational StepCurve::operator()(const Rational& x) const {
    auto [i, at_node] = locate(x);
    return at_node ? values_[i] : pieces_[i](x);
}

double StepCurve::operator()(double x) const {
    auto it = std::lower_bound(nodes_d_.begin(), nodes_d_.end(), x);
    if (it == nodes_d_.end()) return values_d_.back();
    auto i = static_cast<std::size_t>(it - nodes_d_.begin());
    if (*it == x) return values_d_[i];
    if (i == 0) return values_d_.front();
    const auto& [s, c] = pieces_d_[i - 1];
    return s * x + c;
}

Rational StepCurve::left_limit(const Rational& x) const {
    auto [i, at_node] = locate(x);
    if (!at_node) return pieces_[i](x);
    return i == 0 ? values_[0] : pieces_[i - 1](x);
}

Rational StepCurve::right_limit(const Rational& x) const {
    auto [i, at_node] = locate(x);
    if (!at_node) return pieces_[i](x);
    return i + 1 == nodes_.size() ? values_[i] : pieces_[i](x);
}

std::vector<StepCurve::Jump> StepCurve::jumps() const {
    std::vector<Jump> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& x = nodes_[i];
        Rational l = i == 0 ? values_[i] : pieces_[i - 1](x);
        Rational r = i + 1 == nodes_.size() ? values_[i] : pieces_[i](x);
        if (l != values_[i] || r != values_[i]) out.push_back({x, std::move(l), values_[i], std::move(r)});
    }
    return out;
}

std::vector<Rational> StepCurve::level_crossings(std::span<const Rational> sorted_levels) const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (p.slope.is_zero()) continue;
        Rational a = p(nodes_[i]), b = p(nodes_[i + 1]);
        if (b < a) std::swap(a, b);
        auto lo = std::upper_bound(sorted_levels.begin(), sorted_levels.end(), a);
        auto hi = std::lower_bound(sorted_levels.begin(), sorted_levels.end(), b);
        for (auto it = lo; it < hi; ++it) out.push_back((*it - p.intercept) / p.slope);
    }
    return out;
}

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace diagcop
