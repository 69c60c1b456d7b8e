// gaussmono: evaluate, verify and scan the symmetry-based monotonicity argument.
//
// Exit status: 0 all checks pass, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussmono/render.hpp"
#include "gaussmono/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOutDirEnv = "GAUSSMONO_OUT_DIR";

struct Options {
    double x = 1.0;
    double a = 1.4;
    double x_min = 0.1;
    double x_max = 3.0;
    double step = 0.05;
    double extent = 1.6;
    int n = 161;
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
    std::vector<double> a_values = gaussmono::default_a_values();
    std::string format;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

gaussmono::OutputFormat resolve_format(const Options& o, gaussmono::OutputFormat fallback) {
    if (o.format.empty()) return fallback;
    const auto f = gaussmono::parse_format(o.format);
    if (!f) throw UsageError("unknown --format '" + o.format + "' (expected json, csv or human)");
    return *f;
}

gaussmono::QuadSpec quad_spec(const Options& o) {
    gaussmono::QuadSpec spec;
    if (o.abs_tol) spec.abs_tol = *o.abs_tol;
    if (o.rel_tol) spec.rel_tol = *o.rel_tol;
    spec.validate();
    return spec;
}

gaussmono::ToleranceOverride tolerance_override(const Options& o) { return {o.abs_tol, o.rel_tol}; }

// --out wins; a relative --out is resolved against $GAUSSMONO_OUT_DIR when set.
void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::filesystem::path path(o.out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path.string());
    file << text;
    if (!file) throw UsageError("failed writing " + path.string());
}

int run_eval(const Options& o) {
    const gaussmono::Params p(o.x, o.a);
    const auto fmt = resolve_format(o, gaussmono::OutputFormat::human);
    emit(o, gaussmono::render_eval(gaussmono::evaluate(p, quad_spec(o)), fmt));
    return kExitOk;
}

int run_verify(const Options& o) {
    const gaussmono::Params p(o.x, o.a);
    const auto fmt = resolve_format(o, gaussmono::OutputFormat::human);
    const auto reports = gaussmono::verify_identities(p, gaussmono::QuadSpec{}, tolerance_override(o));
    emit(o, gaussmono::render_reports(reports, fmt));
    for (const auto& r : reports) {
        if (!r.pass) return kExitFailure;
    }
    return kExitOk;
}

int run_scan(const Options& o) {
    const auto fmt = resolve_format(o, gaussmono::OutputFormat::csv);
    const auto grid = gaussmono::make_x_grid(o.x_min, o.x_max, o.step);
    const auto scan = gaussmono::scan_monotonicity(o.a, grid, quad_spec(o));
    emit(o, gaussmono::render_scan(scan, fmt));
    return scan.monotone_consistent ? kExitOk : kExitFailure;
}

int run_surface(const Options& o) {
    const gaussmono::Params p(o.x, o.a);
    const auto fmt = resolve_format(o, gaussmono::OutputFormat::csv);
    emit(o, gaussmono::render_surface(gaussmono::figure_surface(p, o.extent, o.n), fmt));
    return kExitOk;
}

int run_campaign(const Options& o) {
    const auto fmt = resolve_format(o, gaussmono::OutputFormat::human);
    const auto grid = gaussmono::make_x_grid(o.x_min, o.x_max, o.step);
    const auto result = gaussmono::campaign(o.a_values, grid, gaussmono::QuadSpec{}, tolerance_override(o));
    emit(o, gaussmono::render_campaign(result, fmt));
    return result.all_pass ? kExitOk : kExitFailure;
}

void add_format_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format: json, csv or human");
    cmd->add_option("--out", o.out, "Write output to this file (relative paths resolve against $GAUSSMONO_OUT_DIR)");
}

void add_tol_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--abs-tol", o.abs_tol, "Absolute tolerance override");
    cmd->add_option("--rel-tol", o.rel_tol, "Relative tolerance override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the monotonicity of f(x) = (phi(ax) - phi(x)) / (x (Phi(ax) + Phi(x)))"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Evaluate f, h (three forms), f' and the denominator");
    eval->add_option("--x", o.x, "Point x > 0")->required();
    eval->add_option("--a", o.a, "Parameter a > 0")->required();
    add_tol_flags(eval, o);
    add_format_flags(eval, o);

    auto* verify = app.add_subcommand("verify", "Run every identity check at one (x, a)");
    verify->add_option("--x", o.x, "Point x > 0")->required();
    verify->add_option("--a", o.a, "Parameter a > 0")->required();
    add_tol_flags(verify, o);
    add_format_flags(verify, o);

    auto* scan = app.add_subcommand("scan", "Scan the sign of h and the monotonicity of f along x");
    scan->add_option("--a", o.a, "Parameter a > 0")->required();
    scan->add_option("--x-min", o.x_min, "First grid point")->capture_default_str();
    scan->add_option("--x-max", o.x_max, "Last grid point")->capture_default_str();
    scan->add_option("--step", o.step, "Grid step")->capture_default_str();
    add_format_flags(scan, o);

    auto* surface = app.add_subcommand("surface", "Emit the gamma surface with the decomposition overlays");
    surface->add_option("--x", o.x, "Point x > 0")->capture_default_str();
    surface->add_option("--a", o.a, "Parameter a > 0")->capture_default_str();
    surface->add_option("--extent", o.extent, "Half-width of the plotted square")->capture_default_str();
    surface->add_option("--n", o.n, "Lattice points per axis (>= 2)")->capture_default_str();
    add_format_flags(surface, o);

    auto* camp = app.add_subcommand("campaign", "Run the full verification campaign");
    camp->add_option("--a-values", o.a_values, "Values of a to scan")->delimiter(',');
    camp->add_option("--x-min", o.x_min, "First grid point")->capture_default_str();
    camp->add_option("--x-max", o.x_max, "Last grid point")->capture_default_str();
    camp->add_option("--step", o.step, "Grid step")->capture_default_str();
    add_tol_flags(camp, o);
    add_format_flags(camp, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(o);
        if (verify->parsed()) return run_verify(o);
        if (scan->parsed()) return run_scan(o);
        if (surface->parsed()) return run_surface(o);
        if (camp->parsed()) return run_campaign(o);
    } catch (const gaussmono::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
