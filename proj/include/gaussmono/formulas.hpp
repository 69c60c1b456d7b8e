#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "gaussmono/specfun.hpp"

namespace gaussmono {

/// The pair (x, a) that parameterizes f and h. Both strictly positive and finite.
class Params {
public:
    Params(double x, double a);

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double ax() const noexcept { return a_ * x_; }

    /// The integration interval [-x, a x].
    [[nodiscard]] Interval interval() const noexcept { return {-x_, a_ * x_}; }

private:
    double x_;
    double a_;
};

/// The four reductions that turn each factor of h into a Gaussian moment
/// combination over [-x, a x].
enum class IdentityId {
    DerivativeTerm,  ///< a x phi'(a x) - x phi'(x) = -4 M1 + 4 M3
    PhiSum,          ///< Phi(a x) + Phi(x) = M0
    PhiDiff,         ///< phi(a x) - phi(x) = -2 M1
    XPhiSum,         ///< a x phi(a x) + x phi(x) = M0 - 2 M2
};

inline constexpr std::array<IdentityId, 4> kAllIdentities = {
    IdentityId::DerivativeTerm, IdentityId::PhiSum, IdentityId::PhiDiff, IdentityId::XPhiSum};

std::string_view identity_name(IdentityId id) noexcept;

/// phi(a x) - phi(x), evaluated as phi(x) * expm1((1 - a^2) x^2).
double numerator(const Params& p) noexcept;

/// x (Phi(a x) + Phi(x)); strictly positive.
double denominator(const Params& p) noexcept;

/// f(x) = (phi(a x) - phi(x)) / (x (Phi(a x) + Phi(x))).
double f_value(const Params& p) noexcept;

/// The three summands of the closed-form sign expression h.
struct HTerms {
    double derivative_term;  ///< (a x phi'(a x) - x phi'(x)) (Phi(a x) + Phi(x))
    double sum_term;         ///< -(phi(a x) - phi(x)) (Phi(a x) + Phi(x))
    double product_term;     ///< -(phi(a x) - phi(x)) (a x phi(a x) + x phi(x))

    [[nodiscard]] double value() const noexcept { return derivative_term + sum_term + product_term; }
    /// Sum of absolute values; the reference magnitude for sign decisions.
    [[nodiscard]] double scale() const noexcept;
};

HTerms h_closed_terms(const Params& p) noexcept;

/// Closed-form h, the numerator of f' after the quotient rule.
double h_closed(const Params& p) noexcept;

/// h = 4 (M3 M0 - M1 M2) with M_k the Gaussian moments over [-x, a x].
double h_separable(const Params& p);

/// f'(x) = h(x) / denominator(x)^2.
double f_prime(const Params& p) noexcept;

/// (left, right) of one reduction identity: left from phi / Phi directly,
/// right from Gaussian moments.
std::pair<double, double> reduction_identity_sides(IdentityId id, const Params& p);

/// lim_{x -> 0+} f(x) = 1 - a.
double f_small_x_limit(double a);

/// Relative width of the band around zero in which h is reported as sign-unknown.
inline constexpr double kIndeterminateBand = 1e-13;

/// Sign of h with the indeterminate band applied: -1, 0 or +1.
int classify_h_sign(const HTerms& terms) noexcept;

}  // namespace gaussmono
