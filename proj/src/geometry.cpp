#include "diagcop/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "diagcop/error.hpp"

namespace diagcop {

namespace {

// Points strictly inside a non-constant segment of p where p meets a level.
std::vector<Rational> pl_crossings(const PiecewiseLinear& p, std::span<const Rational> sorted_levels) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < p.segments(); ++i) {
        const auto& s = p.slope(i);
        if (s.is_zero()) continue;
        const auto& a = min(p.value(i), p.value(i + 1));
        const auto& b = max(p.value(i), p.value(i + 1));
        auto lo = std::upper_bound(sorted_levels.begin(), sorted_levels.end(), a);
        auto hi = std::lower_bound(sorted_levels.begin(), sorted_levels.end(), b);
        for (auto it = lo; it < hi; ++it) out.push_back(p.x(i) + (*it - p.value(i)) / s);
    }
    return out;
}

std::vector<Rational> with_grid(std::span<const Rational> grid, std::vector<Rational> extra) {
    extra.insert(extra.end(), grid.begin(), grid.end());
    return sorted_unique(std::move(extra));
}

}  // namespace

Rational h_at(const DeltaHat& dh, const Rational& x) {
    const auto& p = dh.pl();
    if (x < Rational(0) || x > Rational(1)) throw Error(ErrorCode::OutOfDomain, "x = " + x.str());
    std::size_t i = p.segment_of(x);
    if (p.slope(i).sign() < 0) return x;
    Rational v = p(x);
    std::size_t lo = i + 1, hi = p.size() - 1;
    if (lo > hi || !(p.value(dh.breakpoint_extremum(lo, hi, Extreme::Min)) < v)) return Rational(1);
    // first breakpoint j >= lo with value below v
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (p.value(dh.breakpoint_extremum(i + 1, mid, Extreme::Min)) < v) hi = mid;
        else lo = mid + 1;
    }
    std::size_t j = lo;
    return p.x(j - 1) + (p.value(j - 1) - v) / (p.value(j - 1) - p.value(j)) * (p.x(j) - p.x(j - 1));
}

StepCurve h_delta(const DeltaHat& dh) {
    const auto& p = dh.pl();
    auto levels = sorted_unique(std::vector<Rational>(p.values().begin(), p.values().end()));
    std::vector<Rational> extra;
    for (std::size_t i = 0; i < p.segments(); ++i) {
        if (p.slope(i).sign() <= 0) continue;
        auto lo = std::upper_bound(levels.begin(), levels.end(), p.value(i));
        auto hi = std::lower_bound(levels.begin(), levels.end(), p.value(i + 1));
        for (auto it = lo; it < hi; ++it) extra.push_back(p.x(i) + (*it - p.value(i)) / p.slope(i));
    }
    auto nodes = with_grid(p.xs(), std::move(extra));
    auto h = [&](const Rational& x) { return h_at(dh, x); };
    auto pieces = StepCurve::fit_pieces(nodes, h);
    std::vector<Rational> values;
    values.reserve(nodes.size());
    for (const auto& n : nodes) values.push_back(h(n));
    return StepCurve(std::move(nodes), std::move(values), std::move(pieces));
}

std::vector<Vertical> h_jumps(const StepCurve& h) {
    std::vector<Vertical> out;
    for (auto& j : h.jumps()) {
        // h is upper semicontinuous, so the value sits on top
        out.push_back({j.x, min(j.left, j.right), j.value});
    }
    return out;
}

const Vertical* HSet::vertical_at(const Rational& x) const {
    auto it = std::lower_bound(verticals_.begin(), verticals_.end(), x,
                               [](const Vertical& v, const Rational& t) { return v.x < t; });
    return it != verticals_.end() && it->x == x ? &*it : nullptr;
}

bool HSet::contains(const Rational& x, const Rational& y) const {
    if (curve_(x) == y) return true;
    const auto* v = vertical_at(x);
    return v && v->y_low <= y && y <= v->y_high;
}

HSet h_set(const DeltaHat& dh) {
    auto h = h_delta(dh);
    auto v = h_jumps(h);
    return HSet(std::move(h), std::move(v));
}

// ---------------------------------------------------------------------------
// Above the diagonal D_f° = {x < y < rho(x)}, rho = r o (id - f1), where r is
// the left-continuous inverse of f2. Below it D_f° = {sigma(x) < y < x},
// sigma = s o f1, where s is the right-continuous inverse of id - f2. Both
// strips are nonempty exactly over Lambda = {dhat > 0}, and the closure adds
// the one-sided limits of rho and sigma at the ends of Lambda's components.

GCurves g_curves(const FSplit& fs, const DeltaHat& dh) {
    const auto& d = dh.pl();
    auto xs = d.xs();
    std::vector<Rational> grid(xs.begin(), xs.end());
    std::vector<Rational> phi_v(grid.size()), psi_v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        phi_v[i] = grid[i] - fs.f1(grid[i]);
        psi_v[i] = grid[i] - fs.f2(grid[i]);
    }
    const auto& f2 = fs.f2;
    const auto& f1 = fs.f1;
    PiecewiseLinear phi(grid, phi_v), psi(grid, psi_v);

    // inf{y : f2(y) >= c}
    auto r = [&](const Rational& c) {
        auto vals = f2.values();
        auto j = static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
        if (j == 0) return Rational(0);
        if (j == vals.size()) return Rational(1);
        return f2.x(j - 1) + (c - f2.value(j - 1)) / f2.slope(j - 1);
    };
    // sup{y : psi(y) <= c}
    auto s = [&](const Rational& c) {
        auto vals = psi.values();
        auto j = static_cast<std::size_t>(std::upper_bound(vals.begin(), vals.end(), c) - vals.begin());
        if (j == vals.size()) return Rational(1);
        if (j == 0) return Rational(0);
        return psi.x(j - 1) + (c - psi.value(j - 1)) / psi.slope(j - 1);
    };

    auto f2_levels = sorted_unique(std::vector<Rational>(f2.values().begin(), f2.values().end()));
    auto psi_levels = sorted_unique(std::vector<Rational>(psi.values().begin(), psi.values().end()));
    auto up_nodes = with_grid(xs, pl_crossings(phi, f2_levels));
    auto lo_nodes = with_grid(xs, pl_crossings(f1, psi_levels));

    auto up_fn = [&](const Rational& t) { return dh(t).sign() > 0 ? r(phi(t)) : t; };
    auto lo_fn = [&](const Rational& t) { return dh(t).sign() > 0 ? s(f1(t)) : t; };
    auto up_pieces = StepCurve::fit_pieces(up_nodes, up_fn);
    auto lo_pieces = StepCurve::fit_pieces(lo_nodes, lo_fn);

    // Lambda contains the open interval after (resp. before) node i
    auto lambda_right = [&](const std::vector<Rational>& n, std::size_t i) {
        return i + 1 < n.size() && dh(n[i] + half(n[i + 1] - n[i])).sign() > 0;
    };
    auto lambda_left = [&](const std::vector<Rational>& n, std::size_t i) {
        return i > 0 && dh(n[i - 1] + half(n[i] - n[i - 1])).sign() > 0;
    };

    std::vector<Rational> up_vals, lo_vals;
    for (std::size_t i = 0; i < up_nodes.size(); ++i) {
        const auto& x = up_nodes[i];
        if (lambda_right(up_nodes, i)) up_vals.push_back(max(x, up_pieces[i](x)));
        else if (lambda_left(up_nodes, i)) up_vals.push_back(max(x, up_pieces[i - 1](x)));
        else up_vals.push_back(x);
    }
    for (std::size_t i = 0; i < lo_nodes.size(); ++i) {
        const auto& x = lo_nodes[i];
        if (lambda_left(lo_nodes, i)) lo_vals.push_back(min(x, lo_pieces[i - 1](x)));
        else if (lambda_right(lo_nodes, i)) lo_vals.push_back(min(x, lo_pieces[i](x)));
        else lo_vals.push_back(x);
    }
    return GCurves{StepCurve(std::move(up_nodes), std::move(up_vals), std::move(up_pieces)),
                   StepCurve(std::move(lo_nodes), std::move(lo_vals), std::move(lo_pieces))};
}

std::string_view to_string(RegionLabel r) noexcept {
    switch (r) {
        case RegionLabel::InteriorDf: return "InteriorDf";
        case RegionLabel::Dx: return "Dx";
        case RegionLabel::Dy: return "Dy";
        case RegionLabel::BoundaryUpper: return "BoundaryUpper";
        case RegionLabel::BoundaryLower: return "BoundaryLower";
        case RegionLabel::Diagonal: return "Diagonal";
    }
    return "?";
}

RegionLabel classify_point(const GCurves& g, const Rational& x, const Rational& y) {
    if (y < Rational(0) || y > Rational(1)) throw Error(ErrorCode::OutOfDomain, "y = " + y.str());
    if (x == y) return RegionLabel::Diagonal;
    if (x < y) {
        auto c = y <=> g.upper(x);
        return c < 0 ? RegionLabel::InteriorDf : (c == 0 ? RegionLabel::BoundaryUpper : RegionLabel::Dx);
    }
    auto c = y <=> g.lower(x);
    return c > 0 ? RegionLabel::InteriorDf : (c == 0 ? RegionLabel::BoundaryLower : RegionLabel::Dy);
}

CurveSet curve_set(const DiagonalModel& m) {
    return CurveSet{g_curves(m.fsplit(), m.delta_hat()), h_set(m.delta_hat())};
}

void write_curves_csv(std::ostream& out, const CurveSet& cs, const CsvOptions& opt) {
    out << "x,y_low,y_high,kind\n";
    auto emit = [&](const StepCurve& c, std::string_view kind) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& x = c.node(i);
            Rational l = c.left_limit(x), r = c.right_limit(x);
            const auto& v = c.node_value(i);
            out << format_value(x, opt) << ',' << format_value(min(min(l, r), v), opt) << ','
                << format_value(max(max(l, r), v), opt) << ',' << kind << '\n';
        }
    };
    emit(cs.g.upper, "gU");
    emit(cs.g.lower, "gL");
    emit(cs.h.curve(), "h");
}

}  // namespace diagcop
