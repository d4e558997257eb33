#pragma once

// Slow, independent reference implementations used to check the library.

#include <cmath>
#include <fstream>
#include <string>

#include "diagcop/bounds.hpp"

#ifndef DIAGCOP_DATA_DIR
#error "DIAGCOP_DATA_DIR must point at data/diagonals"
#endif

namespace testsupport {

using diagcop::DiagonalModel;
using diagcop::DiagonalSection;
using diagcop::PiecewiseLinear;
using diagcop::Rational;

inline std::string data_path(const std::string& name) { return std::string(DIAGCOP_DATA_DIR) + "/" + name; }

inline DiagonalSection load(const std::string& name) {
    return diagcop::validate_diagonal(diagcop::load_diag(data_path(name)), name);
}

/// delta(x) = x^2 through its chords on the N-grid.
inline DiagonalSection chordal_square(int n) {
    std::vector<Rational> xs, vs;
    for (int k = 0; k <= n; ++k) {
        Rational x(k, n);
        xs.push_back(x);
        vs.push_back(x * x);
    }
    return diagcop::validate_diagonal(PiecewiseLinear(std::move(xs), std::move(vs)), "x^2");
}

// Closed forms for delta(x) = x^2.
namespace square {
inline double g_upper(double x) { return x <= 0.25 ? std::sqrt(x) : x <= 0.5 ? x + 0.25 : 2 * x - x * x; }
inline double g_lower(double x) { return x <= 0.5 ? 0.0 : 0.5 - std::sqrt(x - x * x); }
inline double h(double x) { return x <= 0.5 ? 1 - x : x; }
}  // namespace square

/// dhat by direct interpolation of x - delta(x).
inline Rational dhat(const DiagonalSection& d, const Rational& x) { return x - d(x); }

/// Extremum of dhat over [lo, hi] by scanning every breakpoint.
inline Rational scan_extremum(const DiagonalSection& d, const Rational& lo, const Rational& hi, bool want_max) {
    Rational best = dhat(d, lo);
    auto take = [&](const Rational& v) {
        if (want_max ? best < v : v < best) best = v;
    };
    take(dhat(d, hi));
    for (const auto& x : d.pl().xs())
        if (lo < x && x < hi) take(dhat(d, x));
    return best;
}

/// TV of dhat over [lo, hi] by summing |increments| across breakpoints.
inline Rational scan_tv(const DiagonalSection& d, const Rational& lo, const Rational& hi) {
    Rational sum(0), prev = lo;
    for (const auto& x : d.pl().xs())
        if (lo < x && x < hi) {
            sum += diagcop::abs(dhat(d, x) - dhat(d, prev));
            prev = x;
        }
    return sum + diagcop::abs(dhat(d, hi) - dhat(d, prev));
}

inline Rational naive_f(const DiagonalSection& d, const Rational& x, const Rational& y) {
    Rational tv = y < x ? -scan_tv(d, y, x) : scan_tv(d, x, y);
    return y - (dhat(d, x) + dhat(d, y) + tv) / Rational(2);
}

inline Rational naive_u(const DiagonalSection& d, const Rational& x, const Rational& y) {
    return diagcop::min(diagcop::min(x, y), naive_f(d, x, y));
}
inline Rational naive_cbar(const DiagonalSection& d, const Rational& x, const Rational& y) {
    return diagcop::max(naive_u(d, x, y), naive_u(d, y, x));
}
inline Rational naive_b(const DiagonalSection& d, const Rational& x, const Rational& y) {
    const auto& lo = diagcop::min(x, y);
    const auto& hi = diagcop::max(x, y);
    return lo - scan_extremum(d, lo, hi, false);
}
inline Rational naive_a(const DiagonalSection& d, const Rational& x, const Rational& y) {
    const auto& lo = diagcop::min(x, y);
    const auto& hi = diagcop::max(x, y);
    return diagcop::min(lo, hi - scan_extremum(d, lo, hi, true));
}
inline Rational naive_k(const DiagonalSection& d, const Rational& x, const Rational& y) {
    return diagcop::min(diagcop::min(x, y), (d(x) + d(y)) / Rational(2));
}

/// max{y >= x : dhat >= dhat(x) on [x, y]}, walking segments left to right.
inline Rational naive_h(const DiagonalSection& d, const Rational& x) {
    Rational v = dhat(d, x), prev = x;
    for (const auto& b : d.pl().xs()) {
        if (!(x < b)) continue;
        Rational w = dhat(d, b);
        if (w < v) {
            // dhat is linear on [prev, b] and drops below v inside it
            Rational wp = dhat(d, prev);
            return prev + (wp - v) / (wp - w) * (b - prev);
        }
        prev = b;
    }
    return Rational(1);
}

/// Boundary of {x < y : f(x, y) < x} at abscissa x, by exact bisection on
/// the signed-TV form of f. Valid where g_U is continuous.
inline double bisect_g_upper(const DiagonalSection& d, const Rational& x, int steps = 55) {
    auto inside = [&](const Rational& y) { return naive_f(d, x, y) < x; };
    if (!(dhat(d, x).sign() > 0)) return x.to_double();
    if (inside(Rational(1))) return 1.0;
    Rational lo = x, hi(1);
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        (inside(mid) ? lo : hi) = mid;
    }
    return lo.to_double();
}

/// Boundary of {y < x : f(x, y) < y} at abscissa x.
inline double bisect_g_lower(const DiagonalSection& d, const Rational& x, int steps = 55) {
    auto inside = [&](const Rational& y) { return naive_f(d, x, y) < y; };
    if (!(dhat(d, x).sign() > 0)) return x.to_double();
    if (inside(Rational(0))) return 0.0;
    Rational lo(0), hi = x;
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        (inside(mid) ? hi : lo) = mid;
    }
    return hi.to_double();
}

}  // namespace testsupport
