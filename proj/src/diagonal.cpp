#include "diagcop/diagonal.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "diagcop/error.hpp"

namespace diagcop {

DiagonalSection DiagonalSection::validate(PiecewiseLinear pl, std::string provenance) {
    const Rational zero(0), one(1), two(2);
    if (pl.value(0) != zero)
        throw Error(ErrorCode::EndpointMismatch, "delta(0) = " + pl.value(0).str() + ", expected 0");
    if (pl.value(pl.size() - 1) != one)
        throw Error(ErrorCode::EndpointMismatch, "delta(1) = " + pl.value(pl.size() - 1).str() + ", expected 1");
    for (std::size_t i = 0; i < pl.size(); ++i) {
        if (pl.value(i) > pl.x(i))
            throw Error(ErrorCode::ViolatesBound,
                        "delta(" + pl.x(i).str() + ") = " + pl.value(i).str() + " exceeds x");
    }
    for (std::size_t i = 0; i < pl.segments(); ++i) {
        const auto& s = pl.slope(i);
        if (s < zero || s > two)
            throw Error(ErrorCode::SlopeOutOfRange, "segment [" + pl.x(i).str() + ", " + pl.x(i + 1).str() +
                                                        "] has slope " + s.str());
    }
    return DiagonalSection(std::move(pl), std::move(provenance));
}

DiagonalSection DiagonalSection::identity() { return DiagonalSection(identity_pl(), "delta_M"); }

bool DiagonalSection::is_identity() const {
    for (std::size_t i = 0; i < pl_.size(); ++i)
        if (pl_.value(i) != pl_.x(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// Sparse table over breakpoint values; each cell holds the index of the
// extremal value on a power-of-two window, ties to the smaller index.
std::vector<std::vector<std::size_t>> build_table(std::span<const Rational> v, Extreme which) {
    auto better = [&](std::size_t a, std::size_t b) {
        if (v[a] == v[b]) return a < b ? a : b;
        bool a_wins = which == Extreme::Min ? v[a] < v[b] : v[a] > v[b];
        return a_wins ? a : b;
    };
    std::vector<std::vector<std::size_t>> t;
    t.emplace_back(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[0][i] = i;
    for (std::size_t k = 1; (std::size_t{1} << k) <= v.size(); ++k) {
        const auto& prev = t[k - 1];
        std::size_t len = v.size() - (std::size_t{1} << k) + 1;
        std::vector<std::size_t> row(len);
        for (std::size_t i = 0; i < len; ++i) row[i] = better(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
        t.push_back(std::move(row));
    }
    return t;
}

}  // namespace

DeltaHat::DeltaHat(const DiagonalSection& d) {
    const auto& p = d.pl();
    std::vector<Rational> xs(p.xs().begin(), p.xs().end());
    std::vector<Rational> vals(p.size()), tv(p.size());
    tv[0] = Rational(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        vals[i] = p.x(i) - p.value(i);
        if (!vals[i].is_zero()) zero_ = false;
        if (i > 0) tv[i] = tv[i - 1] + abs(vals[i] - vals[i - 1]);
    }
    pl_ = PiecewiseLinear(xs, std::move(vals));
    tv_ = PiecewiseLinear(std::move(xs), std::move(tv));
    min_table_ = build_table(pl_.values(), Extreme::Min);
    max_table_ = build_table(pl_.values(), Extreme::Max);
}

Rational DeltaHat::total_variation(const Rational& x, const Rational& y) const { return tv_(y) - tv_(x); }

std::size_t DeltaHat::breakpoint_extremum(std::size_t first, std::size_t last, Extreme which) const {
    const auto& table = which == Extreme::Min ? min_table_ : max_table_;
    std::size_t len = last - first + 1;
    std::size_t k = 0;
    while ((std::size_t{2} << k) <= len) ++k;
    std::size_t a = table[k][first], b = table[k][last + 1 - (std::size_t{1} << k)];
    const auto& v = pl_.values();
    if (v[a] == v[b]) return a < b ? a : b;
    bool a_wins = which == Extreme::Min ? v[a] < v[b] : v[a] > v[b];
    return a_wins ? a : b;
}

Extremum DeltaHat::extremum(const Rational& lo, const Rational& hi, Extreme which) const {
    if (lo < Rational(0) || hi > Rational(1) || hi < lo)
        throw Error(ErrorCode::OutOfDomain, "interval [" + lo.str() + ", " + hi.str() + "]");
    auto wins = [&](const Rational& cand, const Rational& best) {
        return which == Extreme::Min ? cand < best : cand > best;
    };
    Extremum best{pl_(lo), lo};
    // breakpoints strictly inside (lo, hi)
    auto xs = pl_.xs();
    auto first = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), lo) - xs.begin());
    auto stop = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), hi) - xs.begin());
    if (first < stop) {
        std::size_t i = breakpoint_extremum(first, stop - 1, which);
        if (wins(pl_.value(i), best.value)) best = {pl_.value(i), pl_.x(i)};
    }
    Rational end = pl_(hi);
    if (wins(end, best.value)) best = {std::move(end), hi};
    return best;
}

// ---------------------------------------------------------------------------

DiagonalSection zigzag_perturb(const DiagonalSection& d, int n) {
    if (n < 1) throw Error(ErrorCode::OutOfDomain, "zigzag tooth count must be positive");
    const auto& p = d.pl();
    const Rational one(1);
    std::vector<std::pair<Rational, Rational>> runs;
    for (std::size_t i = 0; i < p.segments(); ++i) {
        if (p.slope(i) != one) continue;
        if (!runs.empty() && runs.back().second == p.x(i)) runs.back().second = p.x(i + 1);
        else runs.emplace_back(p.x(i), p.x(i + 1));
    }
    if (runs.empty()) throw Error(ErrorCode::NoSlopeOneSegment, "delta has no slope-1 segment to perturb");

    // phi as a piecewise-linear function: zero outside the runs, teeth inside.
    std::vector<Rational> xs{Rational(0)}, vs{Rational(0)};
    for (const auto& [a, b] : runs) {
        Rational step = (b - a) / Rational(2 * static_cast<std::int64_t>(n));
        for (int k = 0; k <= 2 * n; ++k) {
            Rational x = a + step * Rational(k);
            Rational v = (k % 2 == 1) ? step : Rational(0);
            if (x == xs.back()) continue;
            xs.push_back(std::move(x));
            vs.push_back(std::move(v));
        }
    }
    if (xs.back() != one) {
        xs.push_back(one);
        vs.push_back(Rational(0));
    }
    PiecewiseLinear phi(std::move(xs), std::move(vs));
    auto perturbed = (p - phi).simplified();
    return DiagonalSection::validate(std::move(perturbed),
                                     "zigzag(" + std::to_string(n) + ") of " + (d.provenance().empty() ? "delta" : d.provenance()));
}

// ---------------------------------------------------------------------------

PiecewiseLinear read_diag(std::istream& in) {
    std::vector<Rational> xs, vs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream tokens(line);
        std::string xt, vt, extra;
        if (!(tokens >> xt >> vt) || (tokens >> extra))
            throw Error(ErrorCode::Malformed, "line " + std::to_string(lineno) + ": expected \"x value\"");
        Rational x = Rational::parse(xt);
        if (!xs.empty() && !(xs.back() < x))
            throw Error(ErrorCode::Malformed, "line " + std::to_string(lineno) + ": breakpoints must be sorted");
        xs.push_back(std::move(x));
        vs.push_back(Rational::parse(vt));
    }
    return PiecewiseLinear(std::move(xs), std::move(vs));
}

PiecewiseLinear load_diag(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    return read_diag(in);
}

void write_diag(std::ostream& out, const DiagonalSection& d) {
    if (!d.provenance().empty()) out << "# " << d.provenance() << '\n';
    for (std::size_t i = 0; i < d.pl().size(); ++i) out << d.pl().x(i) << ' ' << d.pl().value(i) << '\n';
}

}  // namespace diagcop
