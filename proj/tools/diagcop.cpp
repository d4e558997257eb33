// Command-line front end for the diagcop library.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "diagcop/asymmetry.hpp"
#include "diagcop/error.hpp"
#include "diagcop/sampler.hpp"
#include "diagcop/svg.hpp"
#include "diagcop/verify.hpp"

using namespace diagcop;

namespace {

struct Config {
    std::string input;
    int n = 0;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t count = 10000;
    bool exact = false;
    int precision = 10;
    std::string kind = "CBAR";
    std::string at;
};

// Claimed-copula failures in `bounds`.
constexpr int kCheckFailed = 4;

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::RouteMismatch: return 2;
        case ErrorCode::IoFailure: return 3;
        default: return 1;
    }
}

ModelPtr load_model(const Config& c) {
    std::ifstream in(c.input);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + c.input);
    return make_model(validate_diagonal(read_diag(in), c.input));
}

QuasiCopula pick(const ModelPtr& m, const std::string& kind) {
    if (kind == "U") return u_delta(m);
    if (kind == "CBAR") return cbar(m);
    if (kind == "A") return a_quasi(m);
    if (kind == "B") return bertino(m);
    if (kind == "K") return k_copula(m);
    return max_asym_copula(m);  // SPLICE
}

std::pair<Rational, Rational> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::Malformed, "--at expects x,y, got '" + s + "'");
    return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

// Runs fn against --out when given, stdout otherwise.
void with_output(const Config& c, const std::function<void(std::ostream&)>& fn) {
    if (c.out.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoFailure, "cannot write " + c.out);
    fn(f);
    if (!f) throw Error(ErrorCode::IoFailure, "write failed for " + c.out);
}

CsvOptions csv(const Config& c) { return {c.exact, c.precision}; }

int cmd_validate(const Config& c) {
    auto m = load_model(c);
    const auto& p = m->diagonal().pl();
    std::cout << "valid: " << p.size() << " breakpoints, simple = " << (is_simple(m->delta_hat()) ? "yes" : "no")
              << ", total variation of dhat = " << m->delta_hat().total_variation(Rational(0), Rational(1)) << '\n';
    return 0;
}

int cmd_eval(const Config& c) {
    auto m = load_model(c);
    auto [x, y] = parse_point(c.at);
    std::cout << pick(m, c.kind)(x, y) << '\n';
    return 0;
}

int cmd_grid(const Config& c) {
    auto m = load_model(c);
    auto q = pick(m, c.kind);
    with_output(c, [&](std::ostream& o) { write_grid_csv(o, q, c.n, csv(c)); });
    return 0;
}

int cmd_bounds(const Config& c) {
    auto m = load_model(c);
    auto fam = bound_family(m);
    std::ostringstream s;
    bool claims_ok = true;

    auto chain = order_chain_check(fam, c.n);
    s << "order_chain: " << (chain.ok ? "ok" : chain.violation) << '\n';
    const auto& d = m->diagonal();
    auto dk = grid_sup_distance(fam.cbar, fam.k, c.n);
    auto da = grid_sup_distance(fam.cbar, fam.a, c.n);
    s << "cbar_equals_K: " << (cbar_equals_K(d) ? "true" : "false") << " (grid sup |CBAR - K| = " << dk << ")\n";
    s << "cbar_equals_A: " << (cbar_equals_A(d) ? "true" : "false") << " (grid sup |CBAR - A| = " << da << ")\n";

    auto report = [&](const QuasiCopula& q, bool claimed) {
        auto r = check_copula_grid(q, c.n, true);
        s << "copula_check " << q.name() << ": " << (r.is_copula_on_grid ? "pass" : "fail")
          << " (min cell volume " << r.min_volume_exact << " at [" << r.x0 << ", " << r.x1 << "] x [" << r.y0
          << ", " << r.y1 << "])" << (claimed ? "" : " [not claimed]") << '\n';
        if (claimed && !r.is_copula_on_grid) claims_ok = false;
    };
    report(fam.u, true);
    report(fam.bertino, true);
    report(fam.k, true);
    report(max_asym_copula(m), true);
    report(fam.cbar, false);
    report(fam.a, false);
    with_output(c, [&](std::ostream& o) { o << s.str(); });
    return chain.ok && claims_ok ? 0 : kCheckFailed;
}

int cmd_asym(const Config& c) {
    auto m = load_model(c);
    auto r = run_mu_algorithm(m, c.n);
    write_report(std::cout, r);
    if (!c.out.empty()) with_output(c, [&](std::ostream& o) { write_omega_csv(o, r, csv(c)); });
    return 0;
}

int cmd_regions(const Config& c) {
    auto m = load_model(c);
    auto cs = curve_set(*m);
    if (!c.at.empty()) {
        auto [x, y] = parse_point(c.at);
        std::cout << to_string(classify_point(cs.g, x, y)) << '\n';
        if (c.out.empty()) return 0;
    }
    with_output(c, [&](std::ostream& o) { write_curves_csv(o, cs, csv(c)); });
    return 0;
}

int cmd_plot(const Config& c, const std::string& layer) {
    auto m = load_model(c);
    std::vector<Layer> layers;
    if (layer == "heatmap") {
        layers.push_back(heatmap_layer(pick(m, c.kind), c.n));
    } else if (layer == "scatter") {
        auto g = g_curves(m->fsplit(), m->delta_hat());
        layers.push_back(scatter_layer(sample_u_delta(*m, g, c.count, c.seed)));
    } else {
        auto cs = curve_set(*m);
        if (layer == "regions") layers.push_back(region_layer(cs.g, c.n));
        layers.push_back(function_layer(m->delta_hat().pl(), "#7a7a7a"));
        layers.push_back(hset_layer(cs.h, "#000000"));
        layers.push_back(step_curve_layer(cs.g.upper, "#b5301f", true));
        layers.push_back(step_curve_layer(cs.g.lower, "#1f6bb5", true));
    }
    if (c.out.empty()) render_svg(std::cout, layers);
    else render_svg(layers, c.out);
    return 0;
}

int cmd_sample(const Config& c) {
    auto m = load_model(c);
    auto g = g_curves(m->fsplit(), m->delta_hat());
    auto s = sample_u_delta(*m, g, c.count, c.seed);
    with_output(c, [&](std::ostream& o) { write_samples_csv(o, s); });
    return 0;
}

int cmd_perturb(const Config& c, int teeth) {
    auto base = load_model(c);
    auto pert = make_model(zigzag_perturb(base->diagonal(), teeth));
    Rational dist = sup_distance(base->diagonal().pl(), pert->diagonal().pl());
    Rational gap = grid_sup_distance(cbar(base), cbar(pert), c.n);
    Rational limit = grid_sup_distance(k_copula(base), a_quasi(base), c.n);
    std::cout << "teeth: " << teeth << '\n'
              << "sup |delta_n - delta| = " << dist << '\n'
              << "cbar_equals_K(delta_n) = " << (cbar_equals_K(pert->diagonal()) ? "true" : "false") << '\n'
              << "cbar_equals_A(delta) = " << (cbar_equals_A(base->diagonal()) ? "true" : "false") << '\n'
              << "grid sup |CBAR(delta_n) - CBAR(delta)| = " << gap << '\n'
              << "grid sup |K(delta) - A(delta)| = " << limit << '\n';
    if (!c.out.empty()) with_output(c, [&](std::ostream& o) { write_diag(o, pert->diagonal()); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Copula bounds and maximal asymmetry for a prescribed diagonal section"};
    app.require_subcommand(1);
    Config c;
    int teeth = 10;
    std::string layer = "curves";
    std::map<std::string, int> default_n{{"asym", 512},  {"grid", 16},    {"bounds", 64},
                                         {"plot", 100},  {"perturb", 64}, {"regions", 64}};
    std::map<std::string, std::function<int()>> run;

    auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", c.input, ".diag file")->required();
        run[name] = std::move(fn);
        return sub;
    };
    auto with_n = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "grid size")->check(CLI::Range(2, 1 << 20));
    };
    auto with_out = [&](CLI::App* sub) { sub->add_option("--out", c.out, "output path"); };
    auto with_csv = [&](CLI::App* sub) {
        sub->add_flag("--exact", c.exact, "exact p/q values");
        sub->add_option("--precision", c.precision, "decimal digits")->check(CLI::Range(0, 40));
    };
    auto with_kind = [&](CLI::App* sub) {
        sub->add_option("--kind", c.kind, "construction")
            ->check(CLI::IsMember({"U", "CBAR", "A", "B", "K", "SPLICE"}));
    };

    add("validate", "check a diagonal file", [&] { return cmd_validate(c); });
    auto* eval = add("eval", "value of one construction at a point", [&] { return cmd_eval(c); });
    with_kind(eval);
    eval->add_option("--at", c.at, "point x,y")->required();
    auto* grid = add("grid", "CSV of a construction on the uniform grid", [&] { return cmd_grid(c); });
    with_kind(grid), with_n(grid), with_csv(grid), with_out(grid);
    auto* bounds = add("bounds", "order chain, characterizations and copula checks", [&] { return cmd_bounds(c); });
    with_n(bounds), with_out(bounds);
    auto* asym = add("asym", "maximal asymmetry report", [&] { return cmd_asym(c); });
    with_n(asym), with_csv(asym);
    asym->add_option("--out", c.out, "Omega CSV path");
    auto* regions = add("regions", "boundary curves CSV or the region of a point", [&] { return cmd_regions(c); });
    with_csv(regions), with_out(regions);
    regions->add_option("--at", c.at, "point x,y to classify");
    auto* plot = add("plot", "SVG figure", [&] { return cmd_plot(c, layer); });
    with_n(plot), with_kind(plot), with_out(plot);
    plot->add_option("--layer", layer, "figure type")->check(CLI::IsMember({"curves", "regions", "heatmap", "scatter"}));
    plot->add_option("--seed", c.seed, "RNG seed");
    plot->add_option("--count", c.count, "sample count")->check(CLI::PositiveNumber);
    auto* sample = add("sample", "draw from U_delta", [&] { return cmd_sample(c); });
    sample->add_option("--seed", c.seed, "RNG seed");
    sample->add_option("--count", c.count, "sample count")->check(CLI::PositiveNumber);
    with_out(sample);
    auto* perturb = add("perturb", "zigzag perturbation and the CBAR gap", [&] { return cmd_perturb(c, teeth); });
    with_n(perturb), with_out(perturb);
    perturb->add_option("--teeth", teeth, "teeth per slope-1 run")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    std::string name = app.get_subcommands().front()->get_name();
    if (c.n == 0) c.n = default_n.count(name) ? default_n[name] : 64;
    try {
        return run[name]();
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
