#include "gaussmono/formulas.hpp"

#include <cmath>

namespace gaussmono {

Params::Params(double x, double a) : x_(x), a_(a) {
    if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("x must be finite and > 0");
    if (!std::isfinite(a) || !(a > 0.0)) throw DomainError("a must be finite and > 0");
}

std::string_view identity_name(IdentityId id) noexcept {
    switch (id) {
    case IdentityId::DerivativeTerm: return "A_derivative_term";
    case IdentityId::PhiSum: return "B_phi_sum";
    case IdentityId::PhiDiff: return "C_phi_diff";
    case IdentityId::XPhiSum: return "D_xphi_sum";
    }
    return "unknown";
}

double numerator(const Params& p) noexcept {
    const double x = p.x();
    const double a = p.a();
    // e^{-a^2x^2} = e^{-x^2} e^{(1-a^2)x^2}; (1-a)(1+a) keeps 1-a^2 exact near a = 1.
    return phi(x) * std::expm1((1.0 - a) * (1.0 + a) * x * x);
}

double denominator(const Params& p) noexcept {
    return p.x() * (capital_phi(p.ax()) + capital_phi(p.x()));
}

double f_value(const Params& p) noexcept { return numerator(p) / denominator(p); }

double HTerms::scale() const noexcept {
    return std::abs(derivative_term) + std::abs(sum_term) + std::abs(product_term);
}

HTerms h_closed_terms(const Params& p) noexcept {
    const double x = p.x();
    const double ax = p.ax();
    const double s = capital_phi(ax) + capital_phi(x);
    const double n = numerator(p);
    const double dterm = ax * phi_prime(ax) - x * phi_prime(x);
    const double xphi_sum = ax * phi(ax) + x * phi(x);
    return {dterm * s, -n * s, -n * xphi_sum};
}

double h_closed(const Params& p) noexcept { return h_closed_terms(p).value(); }

double h_separable(const Params& p) {
    const Interval iv = p.interval();
    const double m0 = gaussian_moment(0, iv);
    const double m1 = gaussian_moment(1, iv);
    const double m2 = gaussian_moment(2, iv);
    const double m3 = gaussian_moment(3, iv);
    return 4.0 * (m3 * m0 - m1 * m2);
}

double f_prime(const Params& p) noexcept {
    const double d = denominator(p);
    return h_closed(p) / (d * d);
}

std::pair<double, double> reduction_identity_sides(IdentityId id, const Params& p) {
    const double x = p.x();
    const double ax = p.ax();
    const Interval iv = p.interval();
    switch (id) {
    case IdentityId::DerivativeTerm:
        return {ax * phi_prime(ax) - x * phi_prime(x),
                -4.0 * gaussian_moment(1, iv) + 4.0 * gaussian_moment(3, iv)};
    case IdentityId::PhiSum:
        return {capital_phi(ax) + capital_phi(x), gaussian_moment(0, iv)};
    case IdentityId::PhiDiff:
        return {numerator(p), -2.0 * gaussian_moment(1, iv)};
    case IdentityId::XPhiSum:
        return {ax * phi(ax) + x * phi(x), gaussian_moment(0, iv) - 2.0 * gaussian_moment(2, iv)};
    }
    throw DomainError("unknown identity");
}

double f_small_x_limit(double a) {
    if (!std::isfinite(a) || !(a > 0.0)) throw DomainError("a must be finite and > 0");
    return 1.0 - a;
}

int classify_h_sign(const HTerms& terms) noexcept {
    const double h = terms.value();
    if (std::abs(h) <= kIndeterminateBand * terms.scale()) return 0;
    return h > 0.0 ? 1 : -1;
}

}  // namespace gaussmono
