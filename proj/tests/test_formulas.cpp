#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "gaussmono/formulas.hpp"
#include "gaussmono/verify.hpp"
#include "test_support.hpp"

using namespace gaussmono;
using gaussmono_test::close;
using gaussmono_test::rel_err;
using gaussmono_test::Sampler;

namespace {

const std::vector<double> kXs{0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
const std::vector<double> kAs{0.25, 0.5, 0.8, 1.0, 1.25, 1.4, 2.0, 4.0};

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double central_difference(double x, double a) {
    const double step = 1e-5 * std::max(1.0, x);
    return (f_value(Params(x + step, a)) - f_value(Params(x - step, a))) / (2.0 * step);
}

}  // namespace

TEST_CASE("Params rejects non-positive or non-finite values") {
    CHECK_THROWS_AS(Params(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Params(-1.0, 2.0), DomainError);
    CHECK_THROWS_AS(Params(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(Params(1.0, -0.5), DomainError);
    CHECK_THROWS_AS(Params(std::numeric_limits<double>::quiet_NaN(), 1.0), DomainError);
    CHECK_THROWS_AS(Params(1.0, std::numeric_limits<double>::infinity()), DomainError);
    const Params p(2.0, 1.5);
    CHECK(p.interval().lo == -2.0);
    CHECK(p.interval().hi == 3.0);
}

TEST_CASE("f_value") {
    CHECK(f_value(Params(1.3, 1.0)) == 0.0);
    CHECK(std::abs(f_value(Params(0.001, 2.0)) - -1.0) <= 5e-3);
    // 60-digit evaluations of the quotient.
    CHECK(rel_err(f_value(Params(1.0, 1.4)), -0.1427118663879820340231621) <= 1e-12);
    CHECK(rel_err(f_value(Params(1e-3, 2.0)), -0.9999985000009000000321424) <= 1e-12);
    CHECK(rel_err(f_value(Params(1e-3, 0.5)), 0.4999998125000281250002511) <= 1e-12);
}

TEST_CASE("denominator") {
    CHECK(rel_err(denominator(Params(1.0, 1.0)), 1.4936482656248542) <= 4e-16);
    Sampler s;
    for (int i = 0; i < 500; ++i) {
        CHECK(denominator(Params(s.uniform(1e-6, 10.0), s.uniform(1e-3, 10.0))) > 0.0);
    }
    CHECK(denominator(Params(1e-8, 2.0)) > 0.0);
}

TEST_CASE("numerator factored form matches the naive difference away from cancellation") {
    Sampler s;
    int compared = 0;
    for (int i = 0; i < 2000; ++i) {
        const double x = s.uniform(0.05, 3.0);
        const double a = s.uniform(0.2, 4.0);
        if (std::abs(a - 1.0) * x * x <= 0.1) continue;
        const Params p(x, a);
        const double naive = phi(a * x) - phi(x);
        CHECK(rel_err(numerator(p), naive) <= 1e-13);
        ++compared;
    }
    CHECK(compared > 500);
}

TEST_CASE("h_closed sign and exact zero") {
    CHECK(h_closed(Params(2.0, 1.0)) == 0.0);
    CHECK(h_closed(Params(1.0, 1.4)) > 0.0);
    CHECK(h_closed(Params(1.0, 0.5)) < 0.0);
    // 60-digit evaluations of the closed form.
    CHECK(rel_err(h_closed(Params(1.0, 1.4)), 0.781477054096925469919292) <= 1e-13);
    CHECK(rel_err(h_closed(Params(1.0, 0.5)), -0.3891811572580195730734009) <= 1e-13);
    CHECK(rel_err(h_closed(Params(0.5, 3.0)), 1.144024741992040087587054) <= 1e-13);
    CHECK(rel_err(h_closed(Params(0.1, 4.0)), 0.005547919146658166894631442) <= 1e-12);
}

TEST_CASE("h_separable") {
    CHECK(std::abs(h_separable(Params(2.0, 1.0))) <= 1e-15);
    CHECK(rel_err(h_separable(Params(1.0, 1.4)), h_closed(Params(1.0, 1.4))) <= 1e-11);
    CHECK(rel_err(h_separable(Params(0.5, 3.0)), h_closed(Params(0.5, 3.0))) <= 1e-11);
}

TEST_CASE("form equivalence and sign law over the grid") {
    for (double x : kXs) {
        for (double a : kAs) {
            CAPTURE(x);
            CAPTURE(a);
            const Params p(x, a);
            const double hc = h_closed(p);
            CHECK(std::abs(hc - h_separable(p)) <= 1e-11 * std::max(1.0, std::abs(hc)));
            if (a == 1.0) {
                CHECK(std::abs(hc) <= 1e-14);
                CHECK(classify_h_sign(h_closed_terms(p)) == 0);
            } else {
                CHECK(sign_of(hc) == sign_of(a - 1.0));
                CHECK(classify_h_sign(h_closed_terms(p)) == sign_of(a - 1.0));
            }
        }
    }
}

TEST_CASE("f_prime") {
    CHECK(f_prime(Params(1.7, 1.0)) == 0.0);
    CHECK(rel_err(f_prime(Params(1.0, 1.4)), central_difference(1.0, 1.4)) <= 1e-6);
    CHECK(rel_err(f_prime(Params(1.0, 1.4)), 0.3088191763075225929547069) <= 1e-12);
    CHECK(f_prime(Params(0.8, 0.5)) < 0.0);
    CHECK(central_difference(0.8, 0.5) < 0.0);
}

TEST_CASE("derivative relation over the grid") {
    for (double x : kXs) {
        for (double a : kAs) {
            if (a == 1.0) continue;
            CAPTURE(x);
            CAPTURE(a);
            const double fp = f_prime(Params(x, a));
            const double fd = central_difference(x, a);
            if (std::abs(fp) > 1e-8) {
                CHECK(rel_err(fp, fd) <= 1e-6);
            } else {
                CHECK(std::abs(fp - fd) <= 1e-10);
            }
        }
    }
}

TEST_CASE("reduction identities") {
    {
        const auto [l, r] = reduction_identity_sides(IdentityId::PhiSum, Params(1.0, 1.4));
        CHECK(l == capital_phi(1.4) + capital_phi(1.0));
        CHECK(rel_err(l, r) <= 1e-13);
    }
    {
        const auto [l, r] = reduction_identity_sides(IdentityId::PhiDiff, Params(2.0, 1.0));
        CHECK(std::abs(l) <= 1e-15);
        CHECK(std::abs(r) <= 1e-15);
    }
    {
        const auto [l, r] = reduction_identity_sides(IdentityId::DerivativeTerm, Params(0.7, 2.5));
        CHECK(rel_err(l, r) <= 1e-12);
    }
    Sampler s(11);
    for (int i = 0; i < 200; ++i) {
        const Params p(s.uniform(0.05, 3.0), s.uniform(0.2, 4.0));
        for (IdentityId id : kAllIdentities) {
            const auto [l, r] = reduction_identity_sides(id, p);
            CAPTURE(identity_name(id));
            CAPTURE(p.x());
            CAPTURE(p.a());
            CHECK(close(l, r, 1e-12, 1e-14));
        }
    }
}

TEST_CASE("f_small_x_limit") {
    CHECK(f_small_x_limit(1.0) == 0.0);
    CHECK(f_small_x_limit(2.0) == -1.0);
    CHECK(f_small_x_limit(0.5) == 0.5);
    for (double a : {0.5, 1.0, 2.0}) CHECK(std::abs(f_value(Params(1e-3, a)) - f_small_x_limit(a)) <= 5e-3);
    CHECK_THROWS_AS(f_small_x_limit(0.0), DomainError);
    CHECK_THROWS_AS(f_small_x_limit(-2.0), DomainError);
}

TEST_CASE("identity names") {
    CHECK(identity_name(IdentityId::DerivativeTerm) == "A_derivative_term");
    CHECK(identity_name(IdentityId::PhiSum) == "B_phi_sum");
    CHECK(identity_name(IdentityId::PhiDiff) == "C_phi_diff");
    CHECK(identity_name(IdentityId::XPhiSum) == "D_xphi_sum");
}
