#include "gaussmono/specfun.hpp"

#include <cmath>
#include <limits>

namespace gaussmono {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215;
constexpr double kOneOverSqrtPi = 0.56418958354775628694807945156077;
constexpr double kSeriesCutoff = 2.5;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// erf(x) = 2/sqrt(pi) x e^{-x^2} sum_n (2x^2)^n / (1*3*...*(2n+1)); every term
// is positive so there is no cancellation.
double erf_series(double x) {
    const double two_x2 = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 500; ++n) {
        term *= two_x2 / (2.0 * n + 1.0);
        sum += term;
        if (term <= kEps * 0.25 * sum) break;
    }
    return kTwoOverSqrtPi * x * std::exp(-x * x) * sum;
}

// erfc(x) for x > 0 via the continued fraction
//   erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 5000; ++n) {
        const double an = 0.5 * n;
        d = x + an * d;
        if (d == 0.0) d = tiny;
        d = 1.0 / d;
        c = x + an / c;
        if (c == 0.0) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) <= kEps) break;
    }
    return kOneOverSqrtPi * std::exp(-x * x) / f;
}

double ipow(double base, unsigned n) {
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i) r *= base;
    return r;
}

// e^{-lo^2} - e^{-hi^2}, switching to the expm1 form when the exponents are close.
double exp_difference(double lo, double hi) {
    const double delta = (lo - hi) * (lo + hi);  // lo^2 - hi^2
    if (std::abs(delta) <= 0.5) {
        return -std::exp(-lo * lo) * std::expm1(delta);
    }
    return std::exp(-lo * lo) - std::exp(-hi * hi);
}

}  // namespace

bool Interval::valid() const noexcept {
    return std::isfinite(lo) && std::isfinite(hi) && lo <= hi;
}

double phi(double x) noexcept { return std::exp(-x * x); }

double phi_prime(double x) noexcept { return -2.0 * x * phi(x); }

double erf_core(double x) noexcept {
    if (std::isnan(x)) return x;
    const double ax = std::abs(x);
    double r;
    if (ax <= kSeriesCutoff) {
        r = erf_series(ax);
    } else if (ax > 27.0) {
        r = 1.0;
    } else {
        r = 1.0 - erfc_continued_fraction(ax);
    }
    return std::signbit(x) ? -r : r;
}

double capital_phi(double x) noexcept { return kHalfSqrtPi * erf_core(x); }

double gaussian_moment(unsigned k, const Interval& iv) {
    if (!iv.valid()) throw DomainError("gaussian_moment: invalid interval");
    if (k > kMaxMomentOrder) throw DomainError("gaussian_moment: order exceeds 60");

    const double lo = iv.lo;
    const double hi = iv.hi;

    // Seed the chain of the same parity as k, then climb with
    //   M_j = -1/2 [u^{j-1} e^{-u^2}]_lo^hi + (j-1)/2 M_{j-2}.
    unsigned j = k % 2;
    double m = (j == 0) ? capital_phi(hi) - capital_phi(lo) : 0.5 * exp_difference(lo, hi);
    const double elo = phi(lo);
    const double ehi = phi(hi);
    for (j += 2; j <= k; j += 2) {
        const double boundary = ipow(hi, j - 1) * ehi - ipow(lo, j - 1) * elo;
        m = -0.5 * boundary + 0.5 * (j - 1) * m;
    }
    return m;
}

}  // namespace gaussmono
