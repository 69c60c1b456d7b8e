#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "doctest.h"
#include "gaussmono/verify.hpp"

using namespace gaussmono;

namespace {

bool all_pass(const std::vector<VerificationReport>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

}  // namespace

TEST_CASE("make_report fills fields and the pass rule") {
    const Params p(1.0, 2.0);
    const auto r = make_report("demo", p, 1.0, 1.0 + 1e-12, 0.0, 1e-11);
    CHECK(r.pass);
    CHECK(r.abs_err == std::abs(1.0 - (1.0 + 1e-12)));
    CHECK(r.recompute_pass() == r.pass);
    const auto bad = make_report("demo", p, 1.0, 1.1, 1e-3, 1e-3);
    CHECK_FALSE(bad.pass);
    const auto nc = make_report("demo", p, 1.0, 1.0, 1.0, 1.0, false);
    CHECK_FALSE(nc.pass);
    CHECK(nc.note.find("converge") != std::string::npos);
}

TEST_CASE("verify_identities passes at the reference points") {
    for (auto [x, a] : {std::pair{1.0, 1.4}, std::pair{2.0, 1.0}, std::pair{0.1, 4.0}}) {
        CAPTURE(x);
        CAPTURE(a);
        const auto reports = verify_identities(Params(x, a));
        for (const auto& r : reports) {
            CAPTURE(r.check_name);
            CAPTURE(r.abs_err);
            CHECK(r.pass);
            CHECK(r.recompute_pass() == r.pass);
            CHECK(r.abs_err == std::abs(r.lhs - r.rhs));
        }
        if (a == 1.0) {
            for (const auto& r : reports) {
                if (r.check_name.rfind("h_", 0) == 0) CHECK(std::abs(r.lhs) <= 1e-10);
            }
        }
    }
}

TEST_CASE("verify_identities covers every displayed relation") {
    const auto reports = verify_identities(Params(1.0, 1.4));
    std::set<std::string> names;
    for (const auto& r : reports) names.insert(r.check_name);
    for (const char* want :
         {"f_display~moment_quotient", "h_closed~h_separable", "h_closed~h_double_integral", "h_tilde_uv~h_tilde_vu",
          "h_tilde_uv~h_closed", "h_tilde_vu~h_closed", "gamma~symmetrized_gamma_tilde", "identity_A_derivative_term",
          "identity_B_phi_sum", "identity_C_phi_diff", "identity_D_xphi_sum", "f_prime~finite_difference",
          "decomposition_core~zero", "decomposition_sum~h_double_integral"}) {
        CAPTURE(want);
        CHECK(names.count(want) == 1);
    }
}

TEST_CASE("non-converged quadrature fails its report instead of throwing") {
    const QuadSpec starved{1e-16, 1e-16, 1, 2};
    std::vector<VerificationReport> reports;
    CHECK_NOTHROW(reports = verify_identities(Params(1.0, 1.4), starved));
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [](const auto& r) { return r.check_name == "h_closed~h_double_integral"; });
    REQUIRE(it != reports.end());
    CHECK_FALSE(it->converged);
    CHECK_FALSE(it->pass);
    CHECK(it->recompute_pass() == it->pass);
}

TEST_CASE("an unattainable relative tolerance forces failures") {
    ToleranceOverride tol;
    tol.rel_tol = 1e-30;
    CHECK_FALSE(all_pass(verify_identities(Params(1.0, 1.4), QuadSpec{}, tol)));
}

TEST_CASE("scan_monotonicity reproduces the three regimes") {
    const auto grid = default_x_grid();
    REQUIRE(grid.size() == 59);
    CHECK(grid.front() == 0.1);
    CHECK(std::abs(grid.back() - 3.0) <= 1e-12);

    const ScanReport up = scan_monotonicity(1.4, grid);
    CHECK(up.monotone_consistent);
    for (const auto& r : up.rows) CHECK(r.sign_observed == 1);

    const ScanReport flat = scan_monotonicity(1.0, grid);
    CHECK(flat.monotone_consistent);
    for (const auto& r : flat.rows) {
        CHECK(std::abs(r.f) <= 1e-14);
        CHECK(r.sign_observed == 0);
    }

    const ScanReport down = scan_monotonicity(0.5, grid);
    CHECK(down.monotone_consistent);
    for (const auto& r : down.rows) CHECK(r.sign_observed == -1);
    CHECK(down.coverage.find("grid points only") != std::string::npos);
}

TEST_CASE("scan_monotonicity rejects bad grids") {
    CHECK_THROWS_AS(scan_monotonicity(1.4, {}), DomainError);
    CHECK_THROWS_AS(scan_monotonicity(1.4, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(scan_monotonicity(1.4, {2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(scan_monotonicity(1.4, {-1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(scan_monotonicity(0.0, {1.0}), DomainError);
}

TEST_CASE("grid-difference signs follow sign(a - 1)") {
    const auto grid = default_x_grid();
    for (double a : default_a_values()) {
        if (a == 1.0) continue;
        const ScanReport s = scan_monotonicity(a, grid);
        const int expected = a > 1.0 ? 1 : -1;
        for (std::size_t i = 1; i < s.rows.size(); ++i) {
            const double d = s.rows[i].f - s.rows[i - 1].f;
            if (std::abs(d) > kDifferenceFloor) CHECK((d > 0.0 ? 1 : -1) == expected);
        }
        CHECK(s.monotone_consistent);
    }
}

TEST_CASE("make_x_grid") {
    CHECK(make_x_grid(1.0, 1.0, 0.5).size() == 1);
    CHECK(make_x_grid(0.5, 1.5, 0.5).size() == 3);
    CHECK_THROWS_AS(make_x_grid(0.0, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(make_x_grid(1.0, 0.5, 0.1), DomainError);
    CHECK_THROWS_AS(make_x_grid(0.1, 1.0, 0.0), DomainError);
}

TEST_CASE("campaign") {
    CHECK_THROWS_AS(campaign({}, default_x_grid()), DomainError);
    CHECK_THROWS_AS(campaign({1.0}, {}), DomainError);

    const CampaignResult single = campaign({1.0}, {1.0});
    CHECK(single.all_pass);
    CHECK(single.scans.size() == 1);

    const CampaignResult c = campaign({0.5, 1.0, 1.4}, default_x_grid());
    CHECK(c.all_pass);
    CHECK(c.total_checks == c.passed_checks);
    CHECK(c.failed_checks == 0);
    std::set<std::pair<double, double>> points;
    for (const auto& r : c.reports) points.insert({r.x, r.a});
    CHECK(points.size() >= 9);
    CHECK(std::is_sorted(c.reports.begin(), c.reports.end(), [](const auto& l, const auto& r) {
        return std::tie(l.a, l.x, l.check_name) < std::tie(r.a, r.x, r.check_name);
    }));
    CHECK(c.summary.find("failed 0") != std::string::npos);
}
