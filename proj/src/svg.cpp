#include "diagcop/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "diagcop/error.hpp"

namespace diagcop {

namespace {

constexpr double kSize = 400, kMargin = 20, kSide = kSize - 2 * kMargin;

double sx(double x) { return kMargin + kSide * x; }
double sy(double y) { return kSize - kMargin - kSide * y; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// midpoint of cell k out of n
Rational cell_center(int k, int n) { return Rational(2 * k + 1, 2 * static_cast<std::int64_t>(n)); }

std::string grey(double v) {
    int c = static_cast<int>(std::clamp(1.0 - v, 0.0, 1.0) * 255.0 + 0.5);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c, c, c);
    return buf;
}

const char* region_color(RegionLabel r) {
    switch (r) {
        case RegionLabel::InteriorDf: return "#f2d7a6";
        case RegionLabel::Dx: return "#bcd4ea";
        case RegionLabel::Dy: return "#c9e3c1";
        default: return "#888888";
    }
}

struct Draw {
    std::ostream& out;

    void operator()(const PolylineLayer& l) const {
        for (const auto& path : l.paths) {
            if (path.empty()) continue;
            out << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"" << num(l.width) << '"';
            if (l.dashed) out << " stroke-dasharray=\"4 3\"";
            out << " points=\"";
            for (std::size_t i = 0; i < path.size(); ++i)
                out << (i ? " " : "") << num(sx(path[i].first)) << ',' << num(sy(path[i].second));
            out << "\"/>\n";
        }
    }
    void operator()(const ScatterLayer& l) const {
        out << "<g fill=\"" << l.color << "\">\n";
        for (const auto& [x, y] : l.points)
            out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"" << num(l.radius) << "\"/>\n";
        out << "</g>\n";
    }
    void operator()(const HeatmapLayer& l) const {
        double w = kSide / l.n;
        for (int i = 0; i < l.n; ++i)
            for (int j = 0; j < l.n; ++j)
                out << "<rect x=\"" << num(kMargin + i * w) << "\" y=\"" << num(kSize - kMargin - (j + 1) * w)
                    << "\" width=\"" << num(w) << "\" height=\"" << num(w) << "\" fill=\""
                    << grey(l.values[static_cast<std::size_t>(i * l.n + j)]) << "\"/>\n";
    }
    void operator()(const RegionLayer& l) const {
        double w = kSide / l.n;
        for (int i = 0; i < l.n; ++i)
            for (int j = 0; j < l.n; ++j)
                out << "<rect x=\"" << num(kMargin + i * w) << "\" y=\"" << num(kSize - kMargin - (j + 1) * w)
                    << "\" width=\"" << num(w) << "\" height=\"" << num(w) << "\" fill=\""
                    << region_color(l.labels[static_cast<std::size_t>(i * l.n + j)]) << "\"/>\n";
    }
};

}  // namespace

PolylineLayer function_layer(const PiecewiseLinear& f, std::string color) {
    PolylineLayer l;
    l.color = std::move(color);
    l.paths.emplace_back();
    for (std::size_t i = 0; i < f.size(); ++i) l.paths.back().emplace_back(f.x(i).to_double(), f.value(i).to_double());
    return l;
}

PolylineLayer step_curve_layer(const StepCurve& c, std::string color, bool dashed) {
    PolylineLayer l;
    l.color = std::move(color);
    l.dashed = dashed;
    // one path per piece, plus a vertical through every jump
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto& a = c.node(i);
        const auto& b = c.node(i + 1);
        l.paths.push_back({{a.to_double(), c.right_limit(a).to_double()}, {b.to_double(), c.left_limit(b).to_double()}});
    }
    for (const auto& j : c.jumps()) {
        double lo = min(min(j.left, j.right), j.value).to_double();
        double hi = max(max(j.left, j.right), j.value).to_double();
        l.paths.push_back({{j.x.to_double(), lo}, {j.x.to_double(), hi}});
    }
    return l;
}

PolylineLayer hset_layer(const HSet& h, std::string color) {
    PolylineLayer l = step_curve_layer(h.curve(), std::move(color));
    // the jump verticals of h already span [liminf, h(x)]
    return l;
}

RegionLayer region_layer(const GCurves& g, int n) {
    RegionLayer l;
    l.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l.labels.push_back(classify_point(g, cell_center(i, n), cell_center(j, n)));
    return l;
}

HeatmapLayer heatmap_layer(const QuasiCopula& q, int n) {
    HeatmapLayer l;
    l.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l.values.push_back(q(cell_center(i, n), cell_center(j, n)).to_double());
    return l;
}

ScatterLayer scatter_layer(const std::vector<Sample>& s) {
    ScatterLayer l;
    for (const auto& p : s) l.points.emplace_back(p.x, p.y);
    return l;
}

void render_svg(std::ostream& out, const std::vector<Layer>& layers) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kSize) << "\" height=\""
        << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(kSize) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(kSize) << "\" height=\"" << num(kSize) << "\" fill=\"#ffffff\"/>\n";
    Draw draw{out};
    for (const auto& l : layers) std::visit(draw, l);
    out << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSide) << "\" height=\""
        << num(kSide) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
        << "</svg>\n";
}

void render_svg(const std::vector<Layer>& layers, const std::string& path) {
    if (layers.empty()) throw Error(ErrorCode::Malformed, "nothing to draw");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path);
    render_svg(out, layers);
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path);
}

}  // namespace diagcop
