#include "gaussmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "gaussmono/kernel.hpp"

namespace gaussmono {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

struct Thresholds {
    double abs_tol;
    double rel_tol;
};

Thresholds apply(const ToleranceOverride& o, double abs_tol, double rel_tol) {
    return {o.abs_tol.value_or(abs_tol), o.rel_tol.value_or(rel_tol)};
}

// Point of an n x n lattice on the rectangle where the two routes of the
// symmetrized kernel disagree most, relative to the size of the summed terms.
std::pair<double, double> worst_symmetrization_point(const Rect& r, int n) {
    double worst = -1.0;
    std::pair<double, double> at{r.u.lo, r.v.lo};
    for (int i = 0; i < n; ++i) {
        const double u = lattice_point(r.u, n, i);
        for (int j = 0; j < n; ++j) {
            const double v = lattice_point(r.v, n, j);
            const auto [g, sym] = symmetrize_check(u, v);
            const double scale = symmetrize_scale(u, v);
            const double rel = scale > 0.0 ? std::abs(g - sym) / scale : 0.0;
            if (rel > worst) {
                worst = rel;
                at = {u, v};
            }
        }
    }
    return at;
}

}  // namespace

bool VerificationReport::recompute_pass() const noexcept {
    const double err = std::abs(lhs - rhs);
    const double bound = std::max(tolerance, rel_tolerance * std::max(std::abs(lhs), std::abs(rhs)));
    return converged && err == abs_err && err <= bound;
}

VerificationReport make_report(std::string name, const Params& p, double lhs, double rhs, double abs_tol,
                               double rel_tol, bool converged) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.x = p.x();
    r.a = p.a();
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    const double mag = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_err = mag > 0.0 ? r.abs_err / mag : 0.0;
    r.tolerance = abs_tol;
    r.rel_tolerance = rel_tol;
    r.converged = converged;
    r.pass = r.recompute_pass();
    if (!converged) r.note = "quadrature did not converge";
    return r;
}

double f_prime_finite_difference(const Params& p) {
    // Tiny x would push the lower stencil point out of the domain.
    const double step = std::min(1e-5 * std::max(1.0, p.x()), 0.5 * p.x());
    const Params up(p.x() + step, p.a());
    const Params down(p.x() - step, p.a());
    return (f_value(up) - f_value(down)) / (2.0 * step);
}

std::vector<VerificationReport> verify_identities(const Params& p, const QuadSpec& spec_in,
                                                  const ToleranceOverride& tol) {
    QuadSpec spec = spec_in;
    if (tol.abs_tol) spec.abs_tol = *tol.abs_tol;
    if (tol.rel_tol) spec.rel_tol = *tol.rel_tol;
    spec.validate();

    std::vector<VerificationReport> out;
    auto add = [&](std::string name, double lhs, double rhs, double abs_tol, double rel_tol,
                   bool converged = true) {
        const Thresholds t = apply(tol, abs_tol, rel_tol);
        out.push_back(make_report(std::move(name), p, lhs, rhs, t.abs_tol, t.rel_tol, converged));
    };

    const Interval iv = p.interval();
    const double hc = h_closed(p);

    // f as displayed vs f rebuilt from moments (-2 M1) / (x M0).
    add("f_display~moment_quotient", f_value(p),
        -2.0 * gaussian_moment(1, iv) / (p.x() * gaussian_moment(0, iv)), 1e-14, 1e-12);

    add("h_closed~h_separable", hc, h_separable(p), 1e-14, 1e-11);

    const QuadResult hd = h_double_integral(p, spec);
    add("h_closed~h_double_integral", hc, hd.value, 1e-10, 1e-9, hd.converged);

    const auto [t_uv, t_vu] = h_tilde_integrals(p, spec);
    add("h_tilde_uv~h_tilde_vu", t_uv.value, t_vu.value, 1e-10, 1e-9, t_uv.converged && t_vu.converged);
    add("h_tilde_uv~h_closed", t_uv.value, hc, 1e-10, 1e-9, t_uv.converged);
    add("h_tilde_vu~h_closed", t_vu.value, hc, 1e-10, 1e-9, t_vu.converged);

    {
        const Rect r{iv, iv};
        const auto [u, v] = worst_symmetrization_point(r, 11);
        const auto [g, sym] = symmetrize_check(u, v);
        add("gamma~symmetrized_gamma_tilde", g, sym, 1e-14 * symmetrize_scale(u, v), 1e-14);
    }

    for (IdentityId id : kAllIdentities) {
        const auto [lhs, rhs] = reduction_identity_sides(id, p);
        add("identity_" + std::string(identity_name(id)), lhs, rhs, 1e-14, 1e-12);
    }

    {
        const double fp = f_prime(p);
        const double fd = f_prime_finite_difference(p);
        if (std::abs(fp) > 1e-8) {
            add("f_prime~finite_difference", fp, fd, 0.0, 1e-6);
        } else {
            add("f_prime~finite_difference", fp, fd, 1e-10, 0.0);
        }
    }

    const DecompositionIntegrals di = integrate_decomposition(p, spec);
    add("decomposition_core~zero", di.core.value, 0.0, std::max(1e-12, di.core.err_estimate), 0.0,
        di.core.converged);
    add("decomposition_sum~h_double_integral", di.total(), hd.value, di.total_err_estimate() + hd.err_estimate,
        0.0, di.converged() && hd.converged);

    return out;
}

ScanReport scan_monotonicity(double a, const std::vector<double>& x_grid, [[maybe_unused]] const QuadSpec& spec) {
    if (!std::isfinite(a) || !(a > 0.0)) throw DomainError("scan: a must be finite and > 0");
    if (x_grid.empty()) throw DomainError("scan: empty x grid");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!std::isfinite(x_grid[i]) || !(x_grid[i] > 0.0)) throw DomainError("scan: x values must be > 0");
        if (i > 0 && !(x_grid[i] > x_grid[i - 1])) throw DomainError("scan: x grid must be strictly increasing");
    }

    ScanReport report;
    report.a = a;
    const int expected = sign_of(a - 1.0);
    bool all_consistent = true;
    for (double x : x_grid) {
        const Params p(x, a);
        const HTerms terms = h_closed_terms(p);
        ScanRow row;
        row.x = x;
        row.a = a;
        row.f = f_value(p);
        row.h = terms.value();
        row.f_prime = f_prime(p);
        row.sign_expected = expected;
        row.sign_observed = classify_h_sign(terms);
        row.consistent = row.sign_observed == expected;
        all_consistent = all_consistent && row.consistent;
        report.rows.push_back(row);
    }

    bool differences_ok = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const double diff = report.rows[i].f - report.rows[i - 1].f;
        if (std::abs(diff) <= kDifferenceFloor) continue;
        if (sign_of(diff) != expected) {
            differences_ok = false;
            report.worst_violation = std::max(report.worst_violation, std::abs(diff));
        }
    }
    report.monotone_consistent = all_consistent && differences_ok;

    std::ostringstream cov;
    cov << "a = " << a << "; x in [" << x_grid.front() << ", " << x_grid.back() << "] on " << x_grid.size()
        << " grid points; monotonicity is checked at grid points only";
    report.coverage = cov.str();
    return report;
}

std::vector<double> default_a_values() { return {0.25, 0.5, 0.8, 1.0, 1.25, 1.4, 2.0, 4.0}; }

std::vector<double> make_x_grid(double x_min, double x_max, double step) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(step)) {
        throw DomainError("grid bounds must be finite");
    }
    if (!(x_min > 0.0)) throw DomainError("x-min must be > 0");
    if (!(x_max >= x_min)) throw DomainError("x-max must be >= x-min");
    if (!(step > 0.0)) throw DomainError("step must be > 0");
    const double span = (x_max - x_min) / step;
    if (span > 1e7) throw DomainError("grid too large");
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) grid.push_back(x_min + static_cast<double>(i) * step);
    return grid;
}

std::vector<double> default_x_grid() { return make_x_grid(0.1, 3.0, 0.05); }

CampaignResult campaign(const std::vector<double>& a_values, const std::vector<double>& x_grid,
                        const QuadSpec& spec, const ToleranceOverride& tol) {
    if (a_values.empty()) throw DomainError("campaign: empty a values");
    if (x_grid.empty()) throw DomainError("campaign: empty x grid");
    for (double a : a_values) {
        if (!std::isfinite(a) || !(a > 0.0)) throw DomainError("campaign: a values must be > 0");
    }

    auto corners = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::vector<double> pick{v.front(), v[v.size() / 2], v.back()};
        std::sort(pick.begin(), pick.end());
        pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
        return pick;
    };

    CampaignResult result;
    for (double a : corners(a_values)) {
        for (double x : corners(x_grid)) {
            auto reports = verify_identities(Params(x, a), spec, tol);
            result.reports.insert(result.reports.end(), reports.begin(), reports.end());
        }
    }
    std::stable_sort(result.reports.begin(), result.reports.end(), [](const auto& l, const auto& r) {
        return std::tie(l.a, l.x, l.check_name) < std::tie(r.a, r.x, r.check_name);
    });

    std::vector<double> sorted_a = a_values;
    std::sort(sorted_a.begin(), sorted_a.end());
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    for (double a : sorted_a) result.scans.push_back(scan_monotonicity(a, x_grid, spec));

    int report_pass = 0;
    for (const auto& r : result.reports) report_pass += r.pass ? 1 : 0;
    int scan_pass = 0;
    for (const auto& s : result.scans) scan_pass += s.monotone_consistent ? 1 : 0;

    const int n_reports = static_cast<int>(result.reports.size());
    const int n_scans = static_cast<int>(result.scans.size());
    result.total_checks = n_reports + n_scans;
    result.passed_checks = report_pass + scan_pass;
    result.failed_checks = result.total_checks - result.passed_checks;
    result.all_pass = result.failed_checks == 0;

    std::ostringstream s;
    s << "identity checks: " << report_pass << "/" << n_reports << " passed; monotonicity scans: " << scan_pass
      << "/" << n_scans << " consistent; total " << result.total_checks << ", passed " << result.passed_checks
      << ", failed " << result.failed_checks << "; x grid [" << x_grid.front() << ", " << x_grid.back() << "] with "
      << x_grid.size() << " points";
    result.summary = s.str();
    return result;
}

}  // namespace gaussmono
