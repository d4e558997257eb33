#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "diagcop/geometry.hpp"

namespace diagcop {

struct Sample {
    double x, y;
};

/// Draws from U_delta: X is uniform and, given X = x, Y = g_L(x) with
/// probability f1'(x+) and Y = g_U(x) otherwise. Reproducible for a seed.
std::vector<Sample> sample_u_delta(const DiagonalModel& m, const GCurves& g, std::size_t count, std::uint64_t seed);

/// "x,y" rows with 17 significant digits.
void write_samples_csv(std::ostream& out, const std::vector<Sample>& s);

}  // namespace diagcop
