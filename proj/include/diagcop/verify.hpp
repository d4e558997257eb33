#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diagcop/bounds.hpp"

namespace diagcop {

/// Uniform nodes i/n, together with every breakpoint of delta when refine is set.
std::vector<Rational> check_grid(const DiagonalSection& d, int n, bool refine);

/// Values q(g[i], g[j]) in row-major order (x outer).
std::vector<Rational> evaluate_grid(const QuasiCopula& q, std::span<const Rational> g);

struct GridReport {
    int n = 0;
    std::size_t nodes = 0;  // grid points per axis, refinement included
    bool exact = true;
    bool grounded_ok = true;
    bool marginals_ok = true;
    bool lipschitz_ok = true;
    double min_volume = 0;     // most negative adjacent-cell volume
    Rational min_volume_exact;  // same, exact mode only
    // cell [x0, x1] x [y0, y1] attaining min_volume
    Rational x0, x1, y0, y1;
    bool is_copula_on_grid = true;
};

/// Copula axioms on the n-grid: groundedness, uniform marginals, 1-Lipschitz
/// in each variable and nonnegative volume of every adjacent cell. Exact mode
/// refines the grid with the breakpoints of delta and compares exactly;
/// otherwise values are compared as doubles with tolerance 1e-12.
GridReport check_copula_grid(const QuasiCopula& q, int n, bool exact, double tolerance = 1e-12);

struct GridArgmax {
    Rational value;
    Rational x, y;
};

/// max |q(x, y) - q(y, x)| over the uniform n-grid; the argmax is the
/// lexicographically smallest (x, y) with x < y.
GridArgmax asymmetry_grid(const QuasiCopula& q, int n);

struct ChainReport {
    bool ok = true;
    std::string violation;  // first failing inequality, empty when ok
};

/// B <= K <= CBAR <= A <= min(x, y) and max(x + y - 1, 0) <= B at every point
/// of the breakpoint-refined n-grid, exactly.
ChainReport order_chain_check(const BoundFamily& family, int n);

/// Every segment of delta meeting {delta < x} has slope 0 or 2.
bool cbar_equals_K(const DiagonalSection& d);

/// For segments i < j with dhat decreasing on i and increasing on j,
/// a_j - b_i >= max(dhat(b_i), dhat(a_j)).
bool cbar_equals_A(const DiagonalSection& d);

/// max |a - b| over the breakpoint-refined n-grid, exactly.
Rational grid_sup_distance(const QuasiCopula& a, const QuasiCopula& b, int n);

/// max over uniform n-grid pairs x <= y of CBAR(x, y) - B(x, y).
double mu_bruteforce(const ModelPtr& m, int n);
Rational mu_bruteforce_exact(const ModelPtr& m, int n);

}  // namespace diagcop
