#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaussmono/formulas.hpp"
#include "gaussmono/quadrature.hpp"

namespace gaussmono {

/// One identity check. Self-auditing: pass must equal recompute_pass().
struct VerificationReport {
    std::string check_name;
    double x = 0.0;
    double a = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;      ///< absolute threshold
    double rel_tolerance = 0.0;  ///< relative to max(|lhs|, |rhs|)
    bool converged = true;       ///< false when a quadrature behind lhs or rhs did not converge
    bool pass = false;
    std::string note;

    /// Re-derives pass from the stored numbers.
    [[nodiscard]] bool recompute_pass() const noexcept;
};

/// Builds a report, filling the error fields and the pass flag.
VerificationReport make_report(std::string name, const Params& p, double lhs, double rhs, double abs_tol,
                               double rel_tol, bool converged = true);

/// Overrides every check's thresholds (and the quadrature tolerances) when set.
struct ToleranceOverride {
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
};

/// Central difference of f_value with step 1e-5 max(1, x).
double f_prime_finite_difference(const Params& p);

/// Runs every identity check at one parameter point. Non-converged
/// quadratures yield failed reports instead of exceptions.
std::vector<VerificationReport> verify_identities(const Params& p, const QuadSpec& spec = {},
                                                  const ToleranceOverride& tol = {});

struct ScanRow {
    double x = 0.0;
    double a = 0.0;
    double f = 0.0;
    double h = 0.0;
    double f_prime = 0.0;
    int sign_expected = 0;
    int sign_observed = 0;
    bool consistent = false;
};

struct ScanReport {
    double a = 0.0;
    std::vector<ScanRow> rows;
    bool monotone_consistent = false;
    /// Largest |f(x_{i+1}) - f(x_i)| among pairs whose sign contradicts sign(a - 1);
    /// for a == 1, the largest difference magnitude above the noise floor.
    double worst_violation = 0.0;
    /// Human-readable statement of what range the scan actually covered.
    std::string coverage;
};

/// Differences of f below this magnitude are not sign-tested.
inline constexpr double kDifferenceFloor = 1e-13;

/// Tabulates f, h and f' along x_grid for fixed a and checks the sign law.
/// Throws DomainError on an invalid a or an empty / non-increasing / non-positive grid.
ScanReport scan_monotonicity(double a, const std::vector<double>& x_grid, const QuadSpec& spec = {});

struct CampaignResult {
    std::vector<ScanReport> scans;
    std::vector<VerificationReport> reports;  ///< sorted by (a, x, check_name)
    std::string summary;
    int total_checks = 0;
    int passed_checks = 0;
    int failed_checks = 0;
    bool all_pass = false;
};

/// Identity checks at the corner and median points of a_values x x_grid plus a
/// monotonicity scan per a. Throws DomainError on empty or invalid inputs.
CampaignResult campaign(const std::vector<double>& a_values, const std::vector<double>& x_grid,
                        const QuadSpec& spec = {}, const ToleranceOverride& tol = {});

/// a in {0.25, 0.5, 0.8, 1, 1.25, 1.4, 2, 4}.
std::vector<double> default_a_values();

/// x_min, x_min + step, ... up to x_max (inclusive within 1e-9 step).
std::vector<double> make_x_grid(double x_min, double x_max, double step);

/// 0.1 to 3 in steps of 0.05.
std::vector<double> default_x_grid();

}  // namespace gaussmono
