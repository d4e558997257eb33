#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diagcop/geometry.hpp"
#include "diagcop/sampler.hpp"

namespace diagcop {

using Point = std::pair<double, double>;

struct PolylineLayer {
    std::vector<std::vector<Point>> paths;  // each path drawn separately
    std::string color = "#000000";
    double width = 1.5;
    bool dashed = false;
};

struct ScatterLayer {
    std::vector<Point> points;
    std::string color = "#1f4e9c";
    double radius = 0.8;
};

/// n x n cells over the unit square, values in [0, 1], x outer.
struct HeatmapLayer {
    int n = 0;
    std::vector<double> values;
};

/// n x n cells coloured by region label, x outer.
struct RegionLayer {
    int n = 0;
    std::vector<RegionLabel> labels;
};

using Layer = std::variant<PolylineLayer, ScatterLayer, HeatmapLayer, RegionLayer>;

PolylineLayer function_layer(const PiecewiseLinear& f, std::string color = "#000000");
/// Graph of a step curve with its jumps drawn as vertical segments.
PolylineLayer step_curve_layer(const StepCurve& c, std::string color, bool dashed = false);
PolylineLayer hset_layer(const HSet& h, std::string color = "#000000");
RegionLayer region_layer(const GCurves& g, int n);
HeatmapLayer heatmap_layer(const QuasiCopula& q, int n);
ScatterLayer scatter_layer(const std::vector<Sample>& s);

/// Standalone SVG 1.1 of the unit square; output depends only on the layers.
void render_svg(std::ostream& out, const std::vector<Layer>& layers);
/// Throws IoFailure when the file cannot be written.
void render_svg(const std::vector<Layer>& layers, const std::string& path);

}  // namespace diagcop
