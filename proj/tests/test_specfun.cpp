#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "doctest.h"
#include "gaussmono/quadrature.hpp"
#include "gaussmono/specfun.hpp"
#include "erf_table.hpp"
#include "test_support.hpp"

using namespace gaussmono;
using gaussmono_test::close;
using gaussmono_test::rel_err;
using gaussmono_test::Sampler;

namespace {

QuadResult moment_by_quadrature(unsigned k, Interval iv) {
    return integrate_1d([k](double u) { return std::pow(u, static_cast<int>(k)) * phi(u); }, iv);
}

}  // namespace

TEST_CASE("phi basic values and evenness") {
    CHECK(phi(0.0) == 1.0);
    CHECK(phi(1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-16));
    Sampler s;
    for (int i = 0; i < 1000; ++i) {
        const double x = s.uniform(-30.0, 30.0);
        CHECK(phi(x) == phi(-x));
        CHECK(phi(x) <= 1.0);
        CHECK(phi(x) >= 0.0);
    }
}

TEST_CASE("phi_prime recurrence and finite difference") {
    CHECK(phi_prime(0.0) == 0.0);
    Sampler s;
    for (int i = 0; i < 200; ++i) {
        const double x = s.uniform(-5.0, 5.0);
        CHECK(phi_prime(x) == -2.0 * x * phi(x));
    }
    const double h = 1e-6;
    const double fd = (phi(0.7 + h) - phi(0.7 - h)) / (2.0 * h);
    CHECK(rel_err(phi_prime(0.7), fd) <= 1e-8);
}

TEST_CASE("erf_core matches the high-precision table") {
    for (const auto& [x, want] : gaussmono_test::kErfTable) {
        CAPTURE(x);
        if (want == 0.0) {
            CHECK(erf_core(x) == 0.0);
        } else {
            CHECK(rel_err(erf_core(x), want) <= 1e-14);
        }
    }
    CHECK(rel_err(erf_core(1.0), 0.8427007929497149) <= 1e-15);
    CHECK(std::abs(erf_core(6.0) - 1.0) <= 1e-16);
}

TEST_CASE("erf_core is odd, bounded and monotone") {
    Sampler s;
    for (int i = 0; i < 2000; ++i) {
        const double x = s.uniform(-8.0, 8.0);
        CHECK(erf_core(-x) == -erf_core(x));
        CHECK(std::abs(erf_core(x)) <= 1.0);
    }
    double prev = erf_core(-6.0);
    for (int i = 1; i <= 1200; ++i) {
        const double x = -6.0 + 0.01 * i;
        const double cur = erf_core(x);
        CHECK(cur >= prev);
        prev = cur;
    }
    // Both branches agree at the switch point to within rounding.
    CHECK(rel_err(erf_core(std::nextafter(2.5, 0.0)), erf_core(std::nextafter(2.5, 3.0))) <= 1e-15);
    CHECK(erf_core(40.0) == 1.0);
    CHECK(std::isnan(erf_core(std::numeric_limits<double>::quiet_NaN())));
}

TEST_CASE("erf_core agrees with the C library across the line") {
    Sampler s;
    for (int i = 0; i < 5000; ++i) {
        const double x = s.uniform(-6.0, 6.0);
        CAPTURE(x);
        CHECK(close(erf_core(x), std::erf(x), 2e-15, 1e-300));
    }
    for (double x : {1e-300, 1e-20, 1e-8, 1e-3}) CHECK(rel_err(erf_core(x), std::erf(x)) <= 1e-15);
}

TEST_CASE("capital_phi values and oddness") {
    CHECK(capital_phi(0.0) == 0.0);
    CHECK(rel_err(capital_phi(1.0), 0.7468241328124271) <= 2e-16);
    Sampler s;
    for (int i = 0; i < 1000; ++i) {
        const double x = s.uniform(-10.0, 10.0);
        CHECK(capital_phi(x) + capital_phi(-x) == 0.0);
    }
    // Strictly increasing on a fine grid where it is not saturated.
    for (int i = 0; i < 500; ++i) {
        const double x = -4.0 + 0.016 * i;
        CHECK(capital_phi(x + 0.016) > capital_phi(x));
    }
}

TEST_CASE("gaussian_moment edge cases") {
    for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        CHECK(gaussian_moment(1, {-t, t}) == 0.0);
        CHECK(gaussian_moment(3, {-t, t}) == 0.0);
        CHECK(std::abs(gaussian_moment(5, {-t, t})) <= 1e-16);
    }
    CHECK(gaussian_moment(0, {1.0, 1.0}) == 0.0);
    CHECK(gaussian_moment(2, {0.0, 40.0}) == doctest::Approx(0.25 * std::sqrt(M_PI)).epsilon(1e-15));
    CHECK_THROWS_AS(gaussian_moment(0, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(gaussian_moment(0, {0.0, std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS(gaussian_moment(61, {0.0, 1.0}), DomainError);
    CHECK_NOTHROW(gaussian_moment(60, {0.0, 1.0}));
}

TEST_CASE("gaussian_moment against the quadrature oracle") {
    CHECK(rel_err(gaussian_moment(0, {-1.0, 1.4}), moment_by_quadrature(0, {-1.0, 1.4}).value) <= 1e-12);
    CHECK(rel_err(gaussian_moment(3, {0.0, 1.0}), moment_by_quadrature(3, {0.0, 1.0}).value) <= 1e-12);

    Sampler s(77);
    for (int trial = 0; trial < 100; ++trial) {
        double lo = s.uniform(-5.0, 5.0);
        double hi = s.uniform(-5.0, 5.0);
        if (lo > hi) std::swap(lo, hi);
        for (unsigned k = 0; k <= 5; ++k) {
            const QuadResult q = moment_by_quadrature(k, {lo, hi});
            REQUIRE(q.converged);
            CAPTURE(lo);
            CAPTURE(hi);
            CAPTURE(k);
            CHECK(close(gaussian_moment(k, {lo, hi}), q.value, 1e-11, 1e-14));
        }
    }
}

TEST_CASE("gaussian_moment near-equal bounds use the cancellation-free seed") {
    // M1 over [t, t + d] ~ d t e^{-t^2} for small d.
    const double t = 1.3;
    const double hi = t + 1e-9;
    const double d = hi - t;
    const double want = 0.5 * std::exp(-t * t) * -std::expm1(-(2.0 * t * d + d * d));
    CHECK(rel_err(gaussian_moment(1, {t, hi}), want) <= 1e-12);
}
