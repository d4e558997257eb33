#include "diagcop/asymmetry.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "diagcop/error.hpp"
#include "diagcop/verify.hpp"

namespace diagcop {

Rational tau(const DeltaHat& dh, const StepCurve& g_upper, const Rational& x) {
    return dh.extremum(x, g_upper(x), Extreme::Min).value;
}

namespace {

Affine fit(const Rational& t1, const Rational& v1, const Rational& t2, const Rational& v2) {
    Rational s = (v2 - v1) / (t2 - t1);
    return {s, v1 - s * t1};
}

void add_crossing(std::vector<Rational>& out, const Affine& p, const Affine& q, const Rational& a, const Rational& b) {
    if (p.slope == q.slope) return;
    Rational t = (q.intercept - p.intercept) / (p.slope - q.slope);
    if (a < t && t < b) out.push_back(std::move(t));
}

}  // namespace

Witness mu_maxmin(const DeltaHat& dh, const StepCurve& g) {
    const auto& p = dh.pl();
    auto xs = p.xs();
    std::vector<Rational> nodes(g.nodes().begin(), g.nodes().end());
    nodes.insert(nodes.end(), xs.begin(), xs.end());
    auto crossings = g.level_crossings(xs);
    nodes.insert(nodes.end(), crossings.begin(), crossings.end());
    nodes = sorted_unique(std::move(nodes));

    std::vector<Rational> cand(nodes);
    const Rational three(3);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto& a = nodes[i];
        const auto& b = nodes[i + 1];
        Rational w = b - a;
        Rational t1 = a + w / three, t2 = a + w * Rational(2) / three, mid = a + half(w);
        Affine l1 = fit(t1, p(t1), t2, p(t2));
        Affine l2 = fit(t1, p(g(t1)), t2, p(g(t2)));
        std::vector<Affine> terms{l1, l2};
        auto first = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), b) - xs.begin());
        auto stop = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), g(mid)) - xs.begin());
        if (first < stop) terms.push_back({Rational(0), p.value(dh.breakpoint_extremum(first, stop - 1, Extreme::Min))});
        for (std::size_t u = 0; u < terms.size(); ++u)
            for (std::size_t v = u + 1; v < terms.size(); ++v) add_crossing(cand, terms[u], terms[v], a, b);
        cand.push_back(std::move(mid));
    }
    std::sort(cand.begin(), cand.end());
    Witness best{Rational(-1), Rational(0)};
    for (const auto& x : cand) {
        Rational t = tau(dh, g, x);
        if (best.value < t) best = {std::move(t), x};
    }
    return best;
}

std::vector<OmegaComponent> omega_set(const StepCurve& g, const HSet& h) {
    std::vector<Rational> nodes(g.nodes().begin(), g.nodes().end());
    auto hn = h.curve().nodes();
    nodes.insert(nodes.end(), hn.begin(), hn.end());
    nodes = sorted_unique(std::move(nodes));

    std::vector<OmegaComponent> parts;
    auto add_point = [&](const Rational& x) {
        Rational y = g(x);
        if (x < y && h.contains(x, y)) parts.push_back({x, x, y, y, true, true});
    };
    const Rational three(3);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        add_point(nodes[i]);
        if (i + 1 == nodes.size()) break;
        const auto& a = nodes[i];
        const auto& b = nodes[i + 1];
        Rational w = b - a;
        Rational t1 = a + w / three, t2 = a + w * Rational(2) / three;
        Rational d1 = g(t1) - h.curve()(t1), d2 = g(t2) - h.curve()(t2);
        if (d1.is_zero() && d2.is_zero()) {
            if (t1 < g(t1)) parts.push_back({a, b, g.right_limit(a), g.left_limit(b), false, false});
        } else if (d1 != d2) {
            Rational t = t1 + d1 * (t2 - t1) / (d1 - d2);
            if (a < t && t < b) add_point(t);
        }
    }

    std::vector<OmegaComponent> out;
    for (auto& e : parts) {
        if (!out.empty()) {
            auto& cur = out.back();
            bool touching = cur.hi == e.lo && (cur.hi_closed || e.lo_closed);
            if (touching && (!cur.is_point() || !e.is_point())) {
                cur.hi = e.hi;
                cur.y_hi = e.y_hi;
                cur.hi_closed = e.hi_closed;
                continue;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

Witness mu_via_H(const DeltaHat& dh, const std::vector<OmegaComponent>& omega) {
    if (omega.empty()) throw Error(ErrorCode::EmptyOmega, "Omega is empty, so delta = delta_M and mu = 0");
    std::optional<Witness> best;
    for (const auto& c : omega) {
        for (const auto* x : {&c.lo, &c.hi}) {
            Rational v = dh(*x);
            if (!best || best->value < v) best = Witness{std::move(v), *x};
        }
    }
    return *best;
}

bool is_simple(const DeltaHat& dh) {
    const auto& p = dh.pl();
    bool descending = false;
    for (std::size_t i = 0; i < p.segments(); ++i) {
        int s = p.slope(i).sign();
        if (s < 0) descending = true;
        else if (s > 0 && descending) return false;
    }
    return true;
}

Witness mu_simple(const DeltaHat& dh, const StepCurve& g, const HSet& h) {
    if (!is_simple(dh)) throw Error(ErrorCode::NotSimple, "dhat is not unimodal");
    if (dh.is_zero()) return {Rational(0), Rational(0)};
    const auto& p = dh.pl();
    std::size_t top = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!(p.value(i) < p.value(top))) top = i;
    const auto& t0 = p.x(top);

    std::optional<Rational> x0;
    for (const auto& c : omega_set(g, h)) {
        if (t0 < c.lo) break;
        if (x0 || !c.is_point())
            throw Error(ErrorCode::RouteMismatch, "Omega meets [0, t0] in more than one point");
        x0 = c.lo;
    }
    if (!x0) throw Error(ErrorCode::RouteMismatch, "no point of Omega in [0, " + t0.str() + "]");
    for (std::size_t i = 0; i < p.segments() && p.x(i) < *x0; ++i)
        if (p.slope(i).sign() < 0) throw Error(ErrorCode::RouteMismatch, "dhat decreases before x0");
    Rational v = dh(*x0);
    if (dh(g(*x0)) != v)
        throw Error(ErrorCode::RouteMismatch, "dhat(g_U(x0)) != dhat(x0) at x0 = " + x0->str());
    return {std::move(v), *x0};
}

QuasiCopula max_asym_copula(const ModelPtr& m) { return splice(cbar(m), bertino(m)); }

AsymmetryReport run_mu_algorithm(const ModelPtr& m, int grid_n) {
    const auto& dh = m->delta_hat();
    auto cs = curve_set(*m);
    const auto& g = cs.g.upper;
    AsymmetryReport r;
    r.omega = omega_set(g, cs.h);
    auto fail = [](const std::string& what) { throw Error(ErrorCode::RouteMismatch, what); };

    if (r.omega.empty()) {
        if (!dh.is_zero()) fail("Omega is empty although delta != delta_M");
        r.mu = Rational(0);
        r.via_h = Rational(0);
    } else {
        auto w = mu_via_H(dh, r.omega);
        r.mu = w.value;
        r.via_h = w.value;
        r.x0 = w.x;
    }
    r.y0 = g(r.x0);

    auto mm = mu_maxmin(dh, g);
    r.maxmin = mm.value;
    r.maxmin_x = mm.x;
    if (r.maxmin != r.mu) fail("max-min route gives " + r.maxmin.str() + ", Omega route gives " + r.mu.str());

    if (is_simple(dh)) {
        r.simple = mu_simple(dh, g, cs.h).value;
        if (*r.simple != r.mu) fail("simple route gives " + r.simple->str() + ", Omega route gives " + r.mu.str());
    }

    auto c = max_asym_copula(m);
    r.attained_by = c.name();
    r.witness_gap = c(r.x0, r.y0) - c(r.y0, r.x0);
    if (r.witness_gap != r.mu) fail("asymmetry at the witness is " + r.witness_gap.str() + ", not " + r.mu.str());

    if (grid_n > 0) {
        r.grid_n = grid_n;
        double o = mu_bruteforce(m, grid_n);
        r.grid_oracle = o;
        double mu = r.mu.to_double();
        if (o > mu + 1e-12 || o < mu - 2.0 / grid_n - 1e-12) {
            std::ostringstream msg;
            msg << std::setprecision(17) << "grid oracle " << o << " outside [mu - 2/n, mu] for mu = " << mu;
            fail(msg.str());
        }
    }
    return r;
}

namespace {

std::string decimal(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

std::string component(const OmegaComponent& c) {
    if (c.is_point()) return c.lo.str();
    return std::string(c.lo_closed ? "[" : "(") + c.lo.str() + ", " + c.hi.str() + (c.hi_closed ? "]" : ")");
}

}  // namespace

void write_report(std::ostream& out, const AsymmetryReport& r) {
    out << "mu = " << r.mu << " (" << decimal(r.mu.to_double()) << ")\n";
    out << "witness: (" << r.x0 << ", " << r.y0 << ")\n";
    out << "omega_components: " << r.omega.size() << '\n';
    out << "omega:";
    for (std::size_t i = 0; i < r.omega.size(); ++i) out << (i ? "; " : " ") << component(r.omega[i]);
    out << '\n';
    out << "route_via_H: " << r.via_h << '\n';
    out << "route_maxmin: " << r.maxmin << " at x = " << r.maxmin_x << '\n';
    out << "route_simple: " << (r.simple ? r.simple->str() : std::string("n/a (not simple)")) << '\n';
    if (r.grid_oracle) out << "grid_oracle: " << decimal(*r.grid_oracle) << " (n = " << r.grid_n << ")\n";
    else out << "grid_oracle: skipped\n";
    out << "witness_gap: " << r.witness_gap << '\n';
    out << "attained_by: " << r.attained_by << '\n';
}

void write_omega_csv(std::ostream& out, const AsymmetryReport& r, const CsvOptions& opt) {
    out << "x,y,kind\n";
    for (const auto& c : r.omega) {
        if (c.is_point()) {
            out << format_value(c.lo, opt) << ',' << format_value(c.y_lo, opt) << ",point\n";
            continue;
        }
        out << format_value(c.lo, opt) << ',' << format_value(c.y_lo, opt) << ','
            << (c.lo_closed ? "interval_start" : "interval_start_open") << '\n';
        out << format_value(c.hi, opt) << ',' << format_value(c.y_hi, opt) << ','
            << (c.hi_closed ? "interval_end" : "interval_end_open") << '\n';
    }
}

}  // namespace diagcop
