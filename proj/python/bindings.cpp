#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussmono/formulas.hpp"
#include "gaussmono/kernel.hpp"
#include "gaussmono/quadrature.hpp"
#include "gaussmono/render.hpp"
#include "gaussmono/specfun.hpp"
#include "gaussmono/verify.hpp"

namespace py = pybind11;
using namespace gaussmono;

namespace {

Interval to_interval(std::pair<double, double> bounds) { return {bounds.first, bounds.second}; }

std::pair<double, double> from_interval(const Interval& iv) { return {iv.lo, iv.hi}; }

py::tuple rect_tuple(const Rect& r) { return py::make_tuple(from_interval(r.u), from_interval(r.v)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical verification of a symmetry-based monotonicity proof for a Gaussian quotient.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // specfun
    m.def("phi", &phi, py::arg("x"));
    m.def("phi_prime", &phi_prime, py::arg("x"));
    m.def("erf_core", &erf_core, py::arg("x"));
    m.def("capital_phi", &capital_phi, py::arg("x"));
    m.def(
        "gaussian_moment",
        [](unsigned k, std::pair<double, double> iv) { return gaussian_moment(k, to_interval(iv)); },
        py::arg("k"), py::arg("interval"), "Integral of u^k exp(-u^2) over (lo, hi).");

    // formulas
    py::class_<Params>(m, "Params")
        .def(py::init<double, double>(), py::arg("x"), py::arg("a"))
        .def_property_readonly("x", &Params::x)
        .def_property_readonly("a", &Params::a)
        .def("__repr__", [](const Params& p) {
            return "Params(x=" + format_number(p.x()) + ", a=" + format_number(p.a()) + ")";
        });

    py::enum_<IdentityId>(m, "IdentityId")
        .value("A_derivative_term", IdentityId::DerivativeTerm)
        .value("B_phi_sum", IdentityId::PhiSum)
        .value("C_phi_diff", IdentityId::PhiDiff)
        .value("D_xphi_sum", IdentityId::XPhiSum);

    m.def("f_value", [](double x, double a) { return f_value(Params(x, a)); }, py::arg("x"), py::arg("a"));
    m.def("denominator", [](double x, double a) { return denominator(Params(x, a)); }, py::arg("x"), py::arg("a"));
    m.def("h_closed", [](double x, double a) { return h_closed(Params(x, a)); }, py::arg("x"), py::arg("a"));
    m.def("h_separable", [](double x, double a) { return h_separable(Params(x, a)); }, py::arg("x"),
          py::arg("a"));
    m.def("f_prime", [](double x, double a) { return f_prime(Params(x, a)); }, py::arg("x"), py::arg("a"));
    m.def("f_small_x_limit", &f_small_x_limit, py::arg("a"));
    m.def(
        "reduction_identity_sides",
        [](IdentityId id, double x, double a) { return reduction_identity_sides(id, Params(x, a)); },
        py::arg("identity"), py::arg("x"), py::arg("a"));

    // kernel
    m.def("gamma", [](double u, double v) { return gaussmono::gamma(u, v); }, py::arg("u"), py::arg("v"));
    m.def("gamma_tilde", &gamma_tilde, py::arg("u"), py::arg("v"));
    m.def("symmetrize_check", &symmetrize_check, py::arg("u"), py::arg("v"));
    m.def("antisymmetry_residual", &antisymmetry_residual, py::arg("u"), py::arg("v"));
    m.def("sign_region", &sign_region, py::arg("u"), py::arg("v"));
    m.def(
        "decompose_rectangle",
        [](double x, double a) {
            const Decomposition d = decompose_rectangle(Params(x, a));
            py::list strips;
            for (const Rect& s : d.strips) strips.append(rect_tuple(s));
            py::dict out;
            out["full"] = rect_tuple(d.full);
            out["core"] = rect_tuple(d.core);
            out["strips"] = strips;
            out["strip_sign"] = d.strip_sign;
            return out;
        },
        py::arg("x"), py::arg("a"), "Core square and sign-definite strips of (-x, a x)^2.");

    // quadrature
    py::class_<QuadSpec>(m, "QuadSpec")
        .def(py::init<>())
        .def(py::init([](double abs_tol, double rel_tol, int max_panels, int panel_order) {
                 QuadSpec s{abs_tol, rel_tol, max_panels, panel_order};
                 s.validate();
                 return s;
             }),
             py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-10, py::arg("max_panels") = 4096,
             py::arg("panel_order") = 20)
        .def_readwrite("abs_tol", &QuadSpec::abs_tol)
        .def_readwrite("rel_tol", &QuadSpec::rel_tol)
        .def_readwrite("max_panels", &QuadSpec::max_panels)
        .def_readwrite("panel_order", &QuadSpec::panel_order);

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("err_estimate", &QuadResult::err_estimate)
        .def_readonly("evaluations", &QuadResult::evaluations)
        .def_readonly("converged", &QuadResult::converged)
        .def("__repr__", [](const QuadResult& r) {
            return "QuadResult(value=" + format_number(r.value) + ", err_estimate=" + format_number(r.err_estimate) +
                   ", converged=" + (r.converged ? "True" : "False") + ")";
        });

    m.def(
        "integrate_1d",
        [](const Integrand1d& f, std::pair<double, double> iv, const QuadSpec& spec) {
            return integrate_1d(f, to_interval(iv), spec);
        },
        py::arg("integrand"), py::arg("interval"), py::arg("spec") = QuadSpec{});
    m.def(
        "integrate_2d",
        [](const Integrand2d& f, std::pair<double, double> u, std::pair<double, double> v, const QuadSpec& spec) {
            return integrate_2d(f, Rect{to_interval(u), to_interval(v)}, spec);
        },
        py::arg("integrand"), py::arg("u"), py::arg("v"), py::arg("spec") = QuadSpec{});
    m.def(
        "h_double_integral", [](double x, double a, const QuadSpec& spec) { return h_double_integral(Params(x, a), spec); },
        py::arg("x"), py::arg("a"), py::arg("spec") = QuadSpec{});
    m.def(
        "h_tilde_integrals", [](double x, double a, const QuadSpec& spec) { return h_tilde_integrals(Params(x, a), spec); },
        py::arg("x"), py::arg("a"), py::arg("spec") = QuadSpec{});
    m.def(
        "integrate_decomposition",
        [](double x, double a, const QuadSpec& spec) {
            const DecompositionIntegrals d = integrate_decomposition(Params(x, a), spec);
            return py::make_tuple(d.core, d.strips);
        },
        py::arg("x"), py::arg("a"), py::arg("spec") = QuadSpec{});

    // verify
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check_name", &VerificationReport::check_name)
        .def_readonly("x", &VerificationReport::x)
        .def_readonly("a", &VerificationReport::a)
        .def_readonly("lhs", &VerificationReport::lhs)
        .def_readonly("rhs", &VerificationReport::rhs)
        .def_readonly("abs_err", &VerificationReport::abs_err)
        .def_readonly("rel_err", &VerificationReport::rel_err)
        .def_readonly("tolerance", &VerificationReport::tolerance)
        .def_readonly("rel_tolerance", &VerificationReport::rel_tolerance)
        .def_readonly("converged", &VerificationReport::converged)
        .def_readonly("passed", &VerificationReport::pass)
        .def_readonly("note", &VerificationReport::note)
        .def("recompute_pass", &VerificationReport::recompute_pass);

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("x", &ScanRow::x)
        .def_readonly("a", &ScanRow::a)
        .def_readonly("f", &ScanRow::f)
        .def_readonly("h", &ScanRow::h)
        .def_readonly("f_prime", &ScanRow::f_prime)
        .def_readonly("sign_expected", &ScanRow::sign_expected)
        .def_readonly("sign_observed", &ScanRow::sign_observed)
        .def_readonly("consistent", &ScanRow::consistent);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("a", &ScanReport::a)
        .def_readonly("rows", &ScanReport::rows)
        .def_readonly("monotone_consistent", &ScanReport::monotone_consistent)
        .def_readonly("worst_violation", &ScanReport::worst_violation)
        .def_readonly("coverage", &ScanReport::coverage);

    py::class_<CampaignResult>(m, "CampaignResult")
        .def_readonly("scans", &CampaignResult::scans)
        .def_readonly("reports", &CampaignResult::reports)
        .def_readonly("summary", &CampaignResult::summary)
        .def_readonly("total_checks", &CampaignResult::total_checks)
        .def_readonly("passed_checks", &CampaignResult::passed_checks)
        .def_readonly("failed_checks", &CampaignResult::failed_checks)
        .def_readonly("all_pass", &CampaignResult::all_pass);

    m.def(
        "verify_identities",
        [](double x, double a, const QuadSpec& spec) { return verify_identities(Params(x, a), spec); },
        py::arg("x"), py::arg("a"), py::arg("spec") = QuadSpec{});
    m.def(
        "scan_monotonicity",
        [](double a, const std::vector<double>& grid, const QuadSpec& spec) { return scan_monotonicity(a, grid, spec); },
        py::arg("a"), py::arg("x_grid"), py::arg("spec") = QuadSpec{});
    m.def(
        "campaign",
        [](const std::vector<double>& a_values, const std::vector<double>& x_grid, const QuadSpec& spec) {
            return campaign(a_values, x_grid, spec);
        },
        py::arg("a_values"), py::arg("x_grid"), py::arg("spec") = QuadSpec{});
    m.def("default_a_values", &default_a_values);
    m.def("default_x_grid", &default_x_grid);
    m.def("make_x_grid", &make_x_grid, py::arg("x_min"), py::arg("x_max"), py::arg("step"));
}
