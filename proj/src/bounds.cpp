#include "diagcop/bounds.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "diagcop/error.hpp"

namespace diagcop {

FSplit build_fsplit(const DeltaHat& dh) {
    const auto& d = dh.pl();
    const auto& tv = dh.tv_prefix();
    std::vector<Rational> f1(d.size()), f2(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        f1[i] = half(tv.value(i) - d.value(i));
        f2[i] = d.x(i) - half(d.value(i) + tv.value(i));
    }
    std::vector<Rational> xs(d.xs().begin(), d.xs().end());
    return FSplit{PiecewiseLinear(xs, std::move(f1)), PiecewiseLinear(xs, std::move(f2))};
}

DiagonalModel::DiagonalModel(DiagonalSection d) : diag_(std::move(d)), dhat_(diag_), split_(build_fsplit(dhat_)) {}

Rational DiagonalModel::f_tv(const Rational& x, const Rational& y) const {
    return y - half(dhat_(x) + dhat_(y) + dhat_.total_variation(x, y));
}

std::string_view to_string(Kind k) noexcept {
    switch (k) {
        case Kind::U: return "U";
        case Kind::CBar: return "CBAR";
        case Kind::Bertino: return "B";
        case Kind::A: return "A";
        case Kind::K: return "K";
        case Kind::Splice: return "SPLICE";
        case Kind::Transpose: return "TRANSPOSE";
        case Kind::Custom: return "CUSTOM";
    }
    return "?";
}

Rational QuasiCopula::operator()(const Rational& x, const Rational& y) const {
    if (x.sign() < 0 || y.sign() < 0 || x > Rational(1) || y > Rational(1))
        throw Error(ErrorCode::OutOfDomain, "(" + x.str() + ", " + y.str() + ") outside the unit square");
    return fn_(x, y);
}

QuasiCopula u_delta(const ModelPtr& m) {
    return QuasiCopula(Kind::U, "U", m, [m](const Rational& x, const Rational& y) {
        return min(min(x, y), m->f(x, y));
    });
}

QuasiCopula cbar(const ModelPtr& m) {
    return QuasiCopula(Kind::CBar, "CBAR", m, [m](const Rational& x, const Rational& y) {
        Rational upper = min(min(x, y), m->f(x, y));
        Rational lower = min(min(x, y), m->f(y, x));
        return max(upper, lower);
    });
}

QuasiCopula bertino(const ModelPtr& m) {
    return QuasiCopula(Kind::Bertino, "B", m, [m](const Rational& x, const Rational& y) {
        const auto& lo = min(x, y);
        const auto& hi = max(x, y);
        return lo - m->delta_hat().extremum(lo, hi, Extreme::Min).value;
    });
}

QuasiCopula a_quasi(const ModelPtr& m) {
    return QuasiCopula(Kind::A, "A", m, [m](const Rational& x, const Rational& y) {
        const auto& lo = min(x, y);
        const auto& hi = max(x, y);
        return min(lo, hi - m->delta_hat().extremum(lo, hi, Extreme::Max).value);
    });
}

QuasiCopula k_copula(const ModelPtr& m) {
    return QuasiCopula(Kind::K, "K", m, [m](const Rational& x, const Rational& y) {
        const auto& d = m->diagonal();
        return min(min(x, y), half(d(x) + d(y)));
    });
}

namespace {

bool same_diagonal(const QuasiCopula& a, const QuasiCopula& b) {
    if (a.model() == b.model()) return true;
    for (const auto& grid : {a.diagonal().pl().xs(), b.diagonal().pl().xs()})
        for (const auto& x : grid)
            if (a(x, x) != b(x, x)) return false;
    return true;
}

}  // namespace

QuasiCopula splice(const QuasiCopula& upper, const QuasiCopula& lower) {
    if (!same_diagonal(upper, lower))
        throw Error(ErrorCode::DiagonalMismatch, upper.name() + " and " + lower.name() + " have different diagonals");
    return QuasiCopula(Kind::Splice, upper.name() + "|" + lower.name(), upper.model(),
                       [upper, lower](const Rational& x, const Rational& y) {
                           return x <= y ? upper(x, y) : lower(x, y);
                       });
}

QuasiCopula transpose(const QuasiCopula& q) {
    return QuasiCopula(Kind::Transpose, q.name() + "^t", q.model(),
                       [q](const Rational& x, const Rational& y) { return q(y, x); });
}

QuasiCopula custom(std::string name, const ModelPtr& m, QuasiCopula::Fn fn) {
    return QuasiCopula(Kind::Custom, std::move(name), m, std::move(fn));
}

Rational cbar_direct(const DiagonalModel& m, const Rational& x, const Rational& y) {
    const auto& lo = min(x, y);
    const auto& hi = max(x, y);
    const auto& dh = m.delta_hat();
    return min(lo, hi - half(dh(x) + dh(y) + dh.total_variation(lo, hi)));
}

BoundFamily bound_family(const ModelPtr& m) {
    return BoundFamily{a_quasi(m), k_copula(m), cbar(m), bertino(m), u_delta(m)};
}

// ---------------------------------------------------------------------------

std::vector<Rational> uniform_grid(int n) {
    if (n < 1) throw Error(ErrorCode::OutOfDomain, "grid size must be positive");
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) g.emplace_back(i, n);
    return g;
}

std::string format_value(const Rational& v, const CsvOptions& opt) {
    if (opt.exact) return v.str();
    using boost::multiprecision::cpp_int;
    auto big = v.to_big();
    cpp_int num = boost::multiprecision::numerator(big);
    cpp_int den = boost::multiprecision::denominator(big);
    bool neg = num < 0;
    if (neg) num = -num;
    cpp_int scale = 1;
    for (int i = 0; i < opt.precision; ++i) scale *= 10;
    // round half away from zero
    cpp_int scaled = (num * scale * 2 + den) / (den * 2);
    std::string digits = scaled.str();
    if (opt.precision > 0) {
        if (digits.size() <= static_cast<std::size_t>(opt.precision))
            digits.insert(0, static_cast<std::size_t>(opt.precision) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(opt.precision), ".");
    }
    if (neg && scaled != 0) digits.insert(0, "-");
    return digits;
}

void write_grid_csv(std::ostream& out, const QuasiCopula& q, int n, const CsvOptions& opt) {
    auto grid = uniform_grid(n);
    out << "x,y,value\n";
    for (const auto& x : grid)
        for (const auto& y : grid)
            out << format_value(x, opt) << ',' << format_value(y, opt) << ',' << format_value(q(x, y), opt) << '\n';
}

std::vector<GridRow> read_grid_csv(std::istream& in) {
    std::vector<GridRow> rows;
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,value", 0) != 0)
        throw Error(ErrorCode::Malformed, "grid CSV must start with header x,y,value");
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string a, b, c;
        if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c))
            throw Error(ErrorCode::Malformed, "bad grid CSV row: " + line);
        rows.push_back({Rational::parse(a), Rational::parse(b), Rational::parse(c)});
    }
    return rows;
}

}  // namespace diagcop
