#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "diagcop/geometry.hpp"

namespace diagcop {

/// tau(x) = min of dhat over [x, g_U(x)].
Rational tau(const DeltaHat& dh, const StepCurve& g_upper, const Rational& x);

struct Witness {
    Rational value;
    Rational x;
};

/// Exact max of tau over [0, 1] and its smallest maximizer. tau is
/// min{dhat(x), dhat(g_U(x)), const} on every cell of a refinement of the
/// breakpoint grid, so the max sits at a node or at a crossing of two of
/// those three affine terms.
Witness mu_maxmin(const DeltaHat& dh, const StepCurve& g_upper);

/// Connected piece of Omega = {x : (x, g_U(x)) in H, g_U(x) > x}. Isolated
/// points have lo == hi; otherwise the open interval (lo, hi) belongs to
/// Omega and the flags say whether its endpoints do.
struct OmegaComponent {
    Rational lo, hi;
    Rational y_lo, y_hi;  // g_U at the endpoints, one-sided for open ends
    bool lo_closed = true;
    bool hi_closed = true;

    bool is_point() const { return lo == hi; }
};

std::vector<OmegaComponent> omega_set(const StepCurve& g_upper, const HSet& h);

/// max of dhat over Omega (its closure on interval components); throws
/// EmptyOmega when Omega is empty, i.e. delta = delta_M.
Witness mu_via_H(const DeltaHat& dh, const std::vector<OmegaComponent>& omega);

/// Nonzero slopes of dhat are positive, then negative.
bool is_simple(const DeltaHat& dh);

/// The unique x0 <= t0 (t0 the last global maximizer of dhat) with
/// (x0, g_U(x0)) in H; returns dhat(x0) after checking dhat(g_U(x0)) = dhat(x0).
/// Throws NotSimple.
Witness mu_simple(const DeltaHat& dh, const StepCurve& g_upper, const HSet& h);

/// CBAR spliced over B; attains the maximal asymmetry.
QuasiCopula max_asym_copula(const ModelPtr& m);

struct AsymmetryReport {
    Rational mu;
    Rational x0, y0;  // witness (x0, g_U(x0))
    std::vector<OmegaComponent> omega;
    Rational maxmin;
    Rational maxmin_x;
    Rational via_h;
    std::optional<Rational> simple;
    int grid_n = 0;
    std::optional<double> grid_oracle;
    Rational witness_gap;  // (CBAR - B)(x0, y0)
    std::string attained_by;
};

/// g_U, h and H, Omega and the max over it, then the max-min route, the
/// simple-diagonal route where it applies and the grid oracle on the uniform
/// grid_n-grid (skipped when grid_n is 0). Any disagreement throws RouteMismatch.
AsymmetryReport run_mu_algorithm(const ModelPtr& m, int grid_n = 512);

/// "key: value" lines, headed by "mu = p/q (decimal)".
void write_report(std::ostream& out, const AsymmetryReport& r);
/// "x,y,kind" rows for Omega; interval components give their two endpoints.
void write_omega_csv(std::ostream& out, const AsymmetryReport& r, const CsvOptions& opt = {});

}  // namespace diagcop
