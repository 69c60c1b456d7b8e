#pragma once

#include <stdexcept>
#include <string>

namespace gaussmono {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed integration bounds [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool valid() const noexcept;
    [[nodiscard]] double length() const noexcept { return hi - lo; }
    [[nodiscard]] bool contains(double t) const noexcept { return lo <= t && t <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Largest moment order accepted by gaussian_moment.
inline constexpr unsigned kMaxMomentOrder = 60;

/// sqrt(pi) / 2, the value of the primitive at +infinity.
inline constexpr double kHalfSqrtPi = 0.88622692545275801364908374167057;

/// Gaussian kernel e^{-x^2}. Even in x.
double phi(double x) noexcept;

/// Derivative of phi, -2 x phi(x).
double phi_prime(double x) noexcept;

/// Error function, accurate to about 1e-15 relative on the real line.
///
/// A positive-term power series is used for |x| <= 2.5 and a continued
/// fraction for the complement beyond that.
double erf_core(double x) noexcept;

/// Primitive of phi from 0: (sqrt(pi)/2) erf(x). Odd and strictly increasing.
double capital_phi(double x) noexcept;

/// Closed-form \int_lo^hi u^k e^{-u^2} du by upward two-term recurrence.
///
/// Throws DomainError when the interval is invalid or k > kMaxMomentOrder.
double gaussian_moment(unsigned k, const Interval& iv);

}  // namespace gaussmono
