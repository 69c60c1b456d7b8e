#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gaussmono/formulas.hpp"
#include "gaussmono/kernel.hpp"
#include "gaussmono/specfun.hpp"

namespace gaussmono {

/// Configuration of the adaptive Gauss-Legendre engine.
struct QuadSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_panels = 4096;
    int panel_order = 20;  ///< nodes per panel (per axis in 2D)

    /// Throws DomainError unless every field is in range.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Newton iteration on P_n from Chebyshev initial guesses.
    static GaussLegendreRule make(int n);
};

using Integrand1d = std::function<double(double)>;
using Integrand2d = std::function<double(double, double)>;

/// Adaptive bisection on the panel with the largest error estimate.
///
/// Each panel is integrated with a panel_order-point rule and compared against
/// a panel_order/2-point rule on the same panel; the difference (plus a
/// rounding floor) is the panel's error estimate. Stops once the summed
/// estimate is within max(abs_tol, rel_tol |value|), or reports
/// converged = false when max_panels is reached.
QuadResult integrate_1d(const Integrand1d& integrand, const Interval& iv, const QuadSpec& spec = {});

/// Tensor-product version of integrate_1d with adaptive quadrisection.
QuadResult integrate_2d(const Integrand2d& integrand, const Rect& r, const QuadSpec& spec = {});

/// \iint_{[-x, a x]^2} phi(u) phi(v) gamma(u, v) du dv.
QuadResult h_double_integral(const Params& p, const QuadSpec& spec = {});

/// The same integral with the unsymmetrized kernels gamma_tilde(u, v) and
/// gamma_tilde(v, u).
std::pair<QuadResult, QuadResult> h_tilde_integrals(const Params& p, const QuadSpec& spec = {});

struct DecompositionIntegrals {
    QuadResult core;
    std::vector<QuadResult> strips;

    [[nodiscard]] double total() const noexcept;
    [[nodiscard]] double total_err_estimate() const noexcept;
    [[nodiscard]] bool converged() const noexcept;
};

/// Integrates the h integrand over each piece of decompose_rectangle(p).
DecompositionIntegrals integrate_decomposition(const Params& p, const QuadSpec& spec = {});

}  // namespace gaussmono
