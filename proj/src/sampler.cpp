#include "diagcop/sampler.hpp"

#include <cstdio>
#include <ostream>
#include <random>

namespace diagcop {

std::vector<Sample> sample_u_delta(const DiagonalModel& m, const GCurves& g, std::size_t count, std::uint64_t seed) {
    const auto& f1 = m.fsplit().f1;
    std::vector<double> slope(f1.segments());
    for (std::size_t i = 0; i < slope.size(); ++i) slope[i] = f1.slope(i).to_double();

    std::mt19937_64 eng(seed);
    auto uniform = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    std::vector<Sample> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        double x = uniform();
        double u = uniform();
        // segment_of gives the segment starting at x, i.e. the right slope
        double p = slope[f1.segment_of(x)];
        out.push_back({x, u < p ? g.lower(x) : g.upper(x)});
    }
    return out;
}

void write_samples_csv(std::ostream& out, const std::vector<Sample>& s) {
    out << "x,y\n";
    char buf[64];
    for (const auto& p : s) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out << buf;
    }
}

}  // namespace diagcop
