#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "diagcop/bounds.hpp"
#include "diagcop/step_curve.hpp"

namespace diagcop {

/// h(x) = max{y >= x : dhat >= dhat(x) on [x, y]}, evaluated directly by a
/// forward search over breakpoints.
Rational h_at(const DeltaHat& dh, const Rational& x);

/// h as an exact step curve.
StepCurve h_delta(const DeltaHat& dh);

struct Vertical {
    Rational x;
    Rational y_low;   // liminf of h at x
    Rational y_high;  // h(x)
};

/// Discontinuities of h with the vertical segment each one adds to H.
std::vector<Vertical> h_jumps(const StepCurve& h);

/// Graph of h together with the vertical segments at its jumps.
class HSet {
public:
    HSet(StepCurve curve, std::vector<Vertical> verticals)
        : curve_(std::move(curve)), verticals_(std::move(verticals)) {}

    const StepCurve& curve() const noexcept { return curve_; }
    const std::vector<Vertical>& verticals() const noexcept { return verticals_; }

    /// Vertical at x, if h jumps there.
    const Vertical* vertical_at(const Rational& x) const;

    bool contains(const Rational& x, const Rational& y) const;

private:
    StepCurve curve_;
    std::vector<Vertical> verticals_;
};

HSet h_set(const DeltaHat& dh);

/// Upper and lower boundary of D_f: g_U(x) = max{y : (x, y) in D_f},
/// g_L(x) = min{y : (x, y) in D_f}.
struct GCurves {
    StepCurve upper;
    StepCurve lower;
};

GCurves g_curves(const FSplit& fs, const DeltaHat& dh);

enum class RegionLabel { InteriorDf, Dx, Dy, BoundaryUpper, BoundaryLower, Diagonal };

std::string_view to_string(RegionLabel r) noexcept;

/// Region of (x, y) relative to the boundary curves. Points strictly between
/// g_L(x) and g_U(x) off the diagonal are InteriorDf.
RegionLabel classify_point(const GCurves& g, const Rational& x, const Rational& y);

struct CurveSet {
    GCurves g;
    HSet h;
};

CurveSet curve_set(const DiagonalModel& m);

/// "x,y_low,y_high,kind" rows, one per node of each curve; y_low and y_high
/// span the value and both one-sided limits. Kinds: gU, gL, h.
void write_curves_csv(std::ostream& out, const CurveSet& cs, const CsvOptions& opt = {});

}  // namespace diagcop
