#include "diagcop/verify.hpp"

#include <algorithm>
#include <cmath>

#include "diagcop/step_curve.hpp"

namespace diagcop {

std::vector<Rational> check_grid(const DiagonalSection& d, int n, bool refine) {
    auto g = uniform_grid(n);
    if (!refine) return g;
    auto xs = d.pl().xs();
    g.insert(g.end(), xs.begin(), xs.end());
    return sorted_unique(std::move(g));
}

std::vector<Rational> evaluate_grid(const QuasiCopula& q, std::span<const Rational> g) {
    std::vector<Rational> v;
    v.reserve(g.size() * g.size());
    for (const auto& x : g)
        for (const auto& y : g) v.push_back(q(x, y));
    return v;
}

namespace {

struct Worst {
    std::size_t i = 0, j = 0;
};

template <typename T, typename Less, typename Zero>
T run_checks(GridReport& rep, Worst& w, std::span<const T> g, const std::vector<T>& v, Less less, Zero is_zero) {
    const std::size_t m = g.size();
    auto at = [&](std::size_t i, std::size_t j) -> const T& { return v[i * m + j]; };
    // |step| <= width
    auto lipschitz = [&](const T& step, const T& width) { return !less(width, step) && !less(step, -width); };
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_zero(at(i, 0)) || !is_zero(at(0, i))) rep.grounded_ok = false;
        if (!is_zero(at(i, m - 1) - g[i]) || !is_zero(at(m - 1, i) - g[i])) rep.marginals_ok = false;
    }
    bool have_worst = false;
    T worst{};
    for (std::size_t i = 0; i + 1 < m; ++i) {
        T dx = g[i + 1] - g[i];
        for (std::size_t j = 0; j < m; ++j) {
            if (!lipschitz(at(i + 1, j) - at(i, j), dx) || !lipschitz(at(j, i + 1) - at(j, i), dx))
                rep.lipschitz_ok = false;
            if (j + 1 == m) continue;
            T vol = at(i + 1, j + 1) + at(i, j) - at(i + 1, j) - at(i, j + 1);
            if (!have_worst || less(vol, worst)) {
                have_worst = true;
                worst = vol;
                w = {i, j};
            }
        }
    }
    return worst;
}

}  // namespace

GridReport check_copula_grid(const QuasiCopula& q, int n, bool exact, double tolerance) {
    GridReport rep;
    rep.n = n;
    rep.exact = exact;
    auto g = check_grid(q.diagonal(), n, exact);
    rep.nodes = g.size();
    auto v = evaluate_grid(q, g);
    Worst w;
    if (exact) {
        rep.min_volume_exact =
            run_checks<Rational>(rep, w, g, v, [](const Rational& a, const Rational& b) { return a < b; },
                                 [](const Rational& a) { return a.is_zero(); });
        rep.min_volume = rep.min_volume_exact.to_double();
    } else {
        std::vector<double> gd, vd;
        for (const auto& x : g) gd.push_back(x.to_double());
        for (const auto& x : v) vd.push_back(x.to_double());
        rep.min_volume = run_checks<double>(rep, w, std::span<const double>(gd), vd,
                                            [tolerance](double a, double b) { return a < b - tolerance; },
                                            [tolerance](double a) { return std::abs(a) <= tolerance; });
    }
    rep.x0 = g[w.i];
    rep.x1 = g[w.i + 1];
    rep.y0 = g[w.j];
    rep.y1 = g[w.j + 1];
    bool volume_ok = exact ? rep.min_volume_exact.sign() >= 0 : rep.min_volume >= -tolerance;
    rep.is_copula_on_grid = rep.grounded_ok && rep.marginals_ok && rep.lipschitz_ok && volume_ok;
    return rep;
}

GridArgmax asymmetry_grid(const QuasiCopula& q, int n) {
    auto g = uniform_grid(n);
    GridArgmax best{Rational(0), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            Rational a = abs(q(g[i], g[j]) - q(g[j], g[i]));
            if (best.value < a) best = {std::move(a), g[i], g[j]};
        }
    return best;
}

ChainReport order_chain_check(const BoundFamily& f, int n) {
    auto g = check_grid(f.a.diagonal(), n, true);
    const Rational zero(0), one(1);
    for (const auto& x : g)
        for (const auto& y : g) {
            Rational b = f.bertino(x, y), k = f.k(x, y), c = f.cbar(x, y), a = f.a(x, y);
            const char* bad = nullptr;
            if (b < max(x + y - one, zero)) bad = "W <= B";
            else if (k < b) bad = "B <= K";
            else if (c < k) bad = "K <= CBAR";
            else if (a < c) bad = "CBAR <= A";
            else if (min(x, y) < a) bad = "A <= M";
            if (bad) return {false, std::string(bad) + " fails at (" + x.str() + ", " + y.str() + ")"};
        }
    return {};
}

bool cbar_equals_K(const DiagonalSection& d) {
    const auto& p = d.pl();
    const Rational zero(0), two(2);
    for (std::size_t i = 0; i < p.segments(); ++i) {
        bool on_diagonal = p.value(i) == p.x(i) && p.value(i + 1) == p.x(i + 1);
        if (on_diagonal) continue;
        if (p.slope(i) != zero && p.slope(i) != two) return false;
    }
    return true;
}

bool cbar_equals_A(const DiagonalSection& d) {
    DeltaHat dh(d);
    const auto& p = dh.pl();
    for (std::size_t i = 0; i < p.segments(); ++i) {
        if (p.slope(i).sign() >= 0) continue;
        const auto& b_i = p.x(i + 1);
        for (std::size_t j = i + 1; j < p.segments(); ++j) {
            if (p.slope(j).sign() <= 0) continue;
            const auto& a_j = p.x(j);
            if (a_j - b_i < max(p.value(i + 1), p.value(j))) return false;
        }
    }
    return true;
}

Rational grid_sup_distance(const QuasiCopula& a, const QuasiCopula& b, int n) {
    auto g = check_grid(a.diagonal(), n, true);
    auto extra = check_grid(b.diagonal(), n, true);
    g.insert(g.end(), extra.begin(), extra.end());
    g = sorted_unique(std::move(g));
    Rational best(0);
    for (const auto& x : g)
        for (const auto& y : g) best = max(best, abs(a(x, y) - b(x, y)));
    return best;
}

Rational mu_bruteforce_exact(const ModelPtr& m, int n) {
    auto c = cbar(m);
    auto b = bertino(m);
    auto g = uniform_grid(n);
    Rational best(0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) best = max(best, c(g[i], g[j]) - b(g[i], g[j]));
    return best;
}

double mu_bruteforce(const ModelPtr& m, int n) { return mu_bruteforce_exact(m, n).to_double(); }

}  // namespace diagcop
