#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "diagcop/diagonal.hpp"

namespace diagcop {

/// f(x, y) = f1(x) + f2(y) with
///   f1 = (TV_0^x - dhat) / 2,   f2 = id - (dhat + TV_0^x) / 2.
/// Both parts are increasing, 1-Lipschitz and vanish at 0.
struct FSplit {
    PiecewiseLinear f1;
    PiecewiseLinear f2;
};

FSplit build_fsplit(const DeltaHat& dh);

/// Immutable precomputed data for one diagonal, shared by every evaluator.
class DiagonalModel {
public:
    explicit DiagonalModel(DiagonalSection d);

    const DiagonalSection& diagonal() const noexcept { return diag_; }
    const DeltaHat& delta_hat() const noexcept { return dhat_; }
    const FSplit& fsplit() const noexcept { return split_; }

    /// f via the split f1(x) + f2(y).
    Rational f(const Rational& x, const Rational& y) const { return split_.f1(x) + split_.f2(y); }
    /// f via y - (dhat(x) + dhat(y) + TV_x^y) / 2, the signed-TV form.
    Rational f_tv(const Rational& x, const Rational& y) const;

private:
    DiagonalSection diag_;
    DeltaHat dhat_;
    FSplit split_;
};

using ModelPtr = std::shared_ptr<const DiagonalModel>;

inline ModelPtr make_model(DiagonalSection d) { return std::make_shared<const DiagonalModel>(std::move(d)); }

inline Rational f_delta(const DiagonalModel& m, const Rational& x, const Rational& y) { return m.f(x, y); }

enum class Kind { U, CBar, Bertino, A, K, Splice, Transpose, Custom };

std::string_view to_string(Kind k) noexcept;

/// Uniform evaluation interface for every (quasi-)copula built from a
/// diagonal. Copulahood is never assumed; ask the verify module.
class QuasiCopula {
public:
    using Fn = std::function<Rational(const Rational&, const Rational&)>;

    QuasiCopula(Kind kind, std::string name, ModelPtr model, Fn fn)
        : kind_(kind), name_(std::move(name)), model_(std::move(model)), fn_(std::move(fn)) {}

    /// Value at (x, y); throws OutOfDomain outside the unit square.
    Rational operator()(const Rational& x, const Rational& y) const;

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const ModelPtr& model() const noexcept { return model_; }
    const DiagonalSection& diagonal() const noexcept { return model_->diagonal(); }

private:
    Kind kind_;
    std::string name_;
    ModelPtr model_;
    Fn fn_;
};

/// U(x, y) = min{x, y, f(x, y)}.
QuasiCopula u_delta(const ModelPtr& m);
/// Upper bound of all copulas with the diagonal: max{U(x, y), U(y, x)}.
QuasiCopula cbar(const ModelPtr& m);
/// Bertino copula: min{x, y} - min of dhat over [x ^ y, x v y].
QuasiCopula bertino(const ModelPtr& m);
/// Upper bound of all quasi-copulas: min{x, y, max{x, y} - max of dhat over the interval}.
QuasiCopula a_quasi(const ModelPtr& m);
/// Upper bound of symmetric copulas: min{x, y, (delta(x) + delta(y)) / 2}.
QuasiCopula k_copula(const ModelPtr& m);

/// q1 on and above the diagonal (x <= y), q2 below. Throws DiagonalMismatch
/// unless both share the diagonal at every breakpoint of either.
QuasiCopula splice(const QuasiCopula& upper, const QuasiCopula& lower);
QuasiCopula transpose(const QuasiCopula& q);

/// Wraps an arbitrary user function; the model supplies the diagonal it claims.
QuasiCopula custom(std::string name, const ModelPtr& m, QuasiCopula::Fn fn);

/// min{x, y, max{x, y} - (dhat(x) + dhat(y) + TV)/2} evaluated directly,
/// independent of U.
Rational cbar_direct(const DiagonalModel& m, const Rational& x, const Rational& y);

struct BoundFamily {
    QuasiCopula a;
    QuasiCopula k;
    QuasiCopula cbar;
    QuasiCopula bertino;
    QuasiCopula u;
};

BoundFamily bound_family(const ModelPtr& m);

// ---------------------------------------------------------------------------
// Grid export: "x,y,value" rows over the (n+1) x (n+1) nodes i/n, row-major
// in x, then y.

struct CsvOptions {
    bool exact = false;  // "p/q" values instead of decimals
    int precision = 10;  // digits after the decimal point
};

/// Uniform nodes 0, 1/n, ..., 1.
std::vector<Rational> uniform_grid(int n);

std::string format_value(const Rational& v, const CsvOptions& opt);

void write_grid_csv(std::ostream& out, const QuasiCopula& q, int n, const CsvOptions& opt = {});

struct GridRow {
    Rational x, y, value;
};

std::vector<GridRow> read_grid_csv(std::istream& in);

}  // namespace diagcop
