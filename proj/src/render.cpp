#include "gaussmono/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace gaussmono {

namespace {

using nlohmann::ordered_json;

ordered_json rect_json(const Rect& r) {
    return {{"u", {r.u.lo, r.u.hi}}, {"v", {r.v.lo, r.v.hi}}};
}

// JSON has no NaN/Inf; such values are rendered as strings.
ordered_json number_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

ordered_json report_json(const VerificationReport& r) {
    ordered_json j;
    j["check_name"] = r.check_name;
    j["x"] = r.x;
    j["a"] = r.a;
    j["lhs"] = number_json(r.lhs);
    j["rhs"] = number_json(r.rhs);
    j["abs_err"] = number_json(r.abs_err);
    j["rel_err"] = number_json(r.rel_err);
    j["tolerance"] = r.tolerance;
    j["rel_tolerance"] = r.rel_tolerance;
    j["converged"] = r.converged;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json scan_json(const ScanReport& s) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.rows) {
        rows.push_back({{"x", r.x},
                        {"a", r.a},
                        {"f", number_json(r.f)},
                        {"h", number_json(r.h)},
                        {"f_prime", number_json(r.f_prime)},
                        {"sign_expected", r.sign_expected},
                        {"sign_observed", r.sign_observed},
                        {"consistent", r.consistent}});
    }
    ordered_json j;
    j["a"] = s.a;
    j["monotone_consistent"] = s.monotone_consistent;
    j["worst_violation"] = s.worst_violation;
    j["coverage"] = s.coverage;
    j["rows"] = std::move(rows);
    return j;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string reports_csv_body(const std::vector<VerificationReport>& reports, bool with_kind) {
    std::ostringstream out;
    for (const auto& r : reports) {
        if (with_kind) out << "identity,";
        out << r.check_name << ',' << format_number(r.x) << ',' << format_number(r.a) << ',' << format_number(r.lhs)
            << ',' << format_number(r.rhs) << ',' << format_number(r.abs_err) << ',' << format_number(r.rel_err)
            << ',' << format_number(r.tolerance) << ',' << format_number(r.rel_tolerance) << ','
            << bool_text(r.converged) << ',' << bool_text(r.pass) << '\n';
    }
    return out.str();
}

constexpr std::string_view kReportCsvHeader =
    "check_name,x,a,lhs,rhs,abs_err,rel_err,tolerance,rel_tolerance,converged,pass";

std::string reports_human(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(38) << "check" << std::setw(8) << "x" << std::setw(8) << "a" << std::setw(25)
        << "lhs" << std::setw(25) << "rhs" << std::setw(12) << "abs_err" << "result\n";
    for (const auto& r : reports) {
        std::ostringstream ae;
        ae << std::scientific << std::setprecision(2) << r.abs_err;
        out << std::left << std::setw(38) << r.check_name << std::setw(8) << r.x << std::setw(8) << r.a
            << std::setw(25) << format_number(r.lhs) << std::setw(25) << format_number(r.rhs) << std::setw(12)
            << ae.str() << (r.pass ? "PASS" : "FAIL");
        if (!r.note.empty()) out << " (" << r.note << ")";
        out << '\n';
    }
    return out.str();
}

std::string scan_csv_rows(const ScanReport& s) {
    std::ostringstream out;
    for (const auto& r : s.rows) {
        out << format_number(r.x) << ',' << format_number(r.a) << ',' << format_number(r.f) << ','
            << format_number(r.h) << ',' << format_number(r.f_prime) << ',' << r.sign_expected << ','
            << r.sign_observed << ',' << bool_text(r.consistent) << '\n';
    }
    return out.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view s) noexcept {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "human") return OutputFormat::human;
    return std::nullopt;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

EvalRecord evaluate(const Params& p, const QuadSpec& spec) {
    EvalRecord r;
    r.x = p.x();
    r.a = p.a();
    r.f = f_value(p);
    r.denominator = denominator(p);
    r.h_closed = h_closed(p);
    r.h_separable = h_separable(p);
    r.h_double_integral = h_double_integral(p, spec);
    r.f_prime = f_prime(p);
    r.f_small_x_limit = f_small_x_limit(p.a());
    return r;
}

SurfaceGrid figure_surface(const Params& p, double extent, int n) {
    if (!std::isfinite(extent) || !(extent > 0.0)) throw DomainError("extent must be > 0");
    const Rect region{{-extent, extent}, {-extent, extent}};
    SurfaceGrid g = surface_grid(region, n, n);
    auto clip = [&](const Rect& r) {
        auto c = [](const Interval& iv, const Interval& bound) {
            return Interval{std::clamp(iv.lo, bound.lo, bound.hi), std::clamp(iv.hi, bound.lo, bound.hi)};
        };
        return Rect{c(r.u, region.u), c(r.v, region.v)};
    };
    const Decomposition d = decompose_rectangle(p);
    g.overlays.push_back({"core_square", clip(d.core)});
    g.overlays.push_back({"full_rectangle", clip(d.full)});
    return g;
}

std::string render_eval(const EvalRecord& r, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: {
        ordered_json j;
        j["x"] = r.x;
        j["a"] = r.a;
        j["f"] = number_json(r.f);
        j["denominator"] = number_json(r.denominator);
        j["h_closed"] = number_json(r.h_closed);
        j["h_separable"] = number_json(r.h_separable);
        j["h_double_integral"] = number_json(r.h_double_integral.value);
        j["h_double_integral_err"] = number_json(r.h_double_integral.err_estimate);
        j["h_double_integral_converged"] = r.h_double_integral.converged;
        j["f_prime"] = number_json(r.f_prime);
        j["f_small_x_limit"] = number_json(r.f_small_x_limit);
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream out;
        out << "x,a,f,denominator,h_closed,h_separable,h_double_integral,h_double_integral_err,f_prime\n"
            << format_number(r.x) << ',' << format_number(r.a) << ',' << format_number(r.f) << ','
            << format_number(r.denominator) << ',' << format_number(r.h_closed) << ',' << format_number(r.h_separable)
            << ',' << format_number(r.h_double_integral.value) << ','
            << format_number(r.h_double_integral.err_estimate) << ',' << format_number(r.f_prime) << '\n';
        return out.str();
    }
    case OutputFormat::human: {
        std::ostringstream out;
        out << "x                  = " << format_number(r.x) << '\n'
            << "a                  = " << format_number(r.a) << '\n'
            << "f                  = " << format_number(r.f) << '\n'
            << "denominator        = " << format_number(r.denominator) << '\n'
            << "h (closed)         = " << format_number(r.h_closed) << '\n'
            << "h (separable)      = " << format_number(r.h_separable) << '\n'
            << "h (double integral)= " << format_number(r.h_double_integral.value) << "  +/- "
            << format_number(r.h_double_integral.err_estimate)
            << (r.h_double_integral.converged ? "" : "  (not converged)") << '\n'
            << "f'                 = " << format_number(r.f_prime) << '\n'
            << "f(0+) = 1 - a      = " << format_number(r.f_small_x_limit) << '\n';
        return out.str();
    }
    }
    return {};
}

std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
        ordered_json j;
        j["total"] = reports.size();
        j["passed"] = passed;
        j["failed"] = static_cast<long>(reports.size()) - passed;
        j["reports"] = std::move(arr);
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv:
        return std::string(kReportCsvHeader) + "\n" + reports_csv_body(reports, false);
    case OutputFormat::human:
        return reports_human(reports);
    }
    return {};
}

std::string render_scan(const ScanReport& s, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json:
        return scan_json(s).dump(2) + "\n";
    case OutputFormat::csv:
        return std::string(kScanCsvHeader) + "\n" + scan_csv_rows(s);
    case OutputFormat::human: {
        std::ostringstream out;
        out << std::left << std::setw(8) << "x" << std::setw(25) << "f" << std::setw(25) << "h" << std::setw(25)
            << "f'" << "sign\n";
        for (const auto& r : s.rows) {
            out << std::left << std::setw(8) << r.x << std::setw(25) << format_number(r.f) << std::setw(25)
                << format_number(r.h) << std::setw(25) << format_number(r.f_prime) << r.sign_observed << '/'
                << r.sign_expected << (r.consistent ? "" : "  INCONSISTENT") << '\n';
        }
        out << s.coverage << '\n'
            << "monotone_consistent: " << bool_text(s.monotone_consistent)
            << "  worst_violation: " << format_number(s.worst_violation) << '\n';
        return out.str();
    }
    }
    return {};
}

std::string render_surface(const SurfaceGrid& g, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: {
        ordered_json j;
        j["region"] = rect_json(g.region);
        j["n_u"] = g.n_u;
        j["n_v"] = g.n_v;
        ordered_json overlays = ordered_json::array();
        for (const auto& o : g.overlays) overlays.push_back({{"label", o.label}, {"rect", rect_json(o.rect)}});
        j["overlays"] = std::move(overlays);
        j["values"] = g.values;
        return j.dump() + "\n";
    }
    case OutputFormat::csv: {
        std::string out = "u,v,gamma\n";
        for (int i = 0; i < g.n_u; ++i) {
            const std::string u = format_number(g.u_at(i));
            for (int j = 0; j < g.n_v; ++j) {
                out += u;
                out += ',';
                out += format_number(g.v_at(j));
                out += ',';
                out += format_number(g.at(i, j));
                out += '\n';
            }
        }
        return out;
    }
    case OutputFormat::human: {
        long pos = 0;
        long neg = 0;
        for (double v : g.values) {
            pos += v > 0.0;
            neg += v < 0.0;
        }
        std::ostringstream out;
        out << "gamma grid " << g.n_u << " x " << g.n_v << " over [" << g.region.u.lo << ", " << g.region.u.hi
            << "] x [" << g.region.v.lo << ", " << g.region.v.hi << "]\n"
            << "positive samples: " << pos << ", negative samples: " << neg << '\n';
        for (const auto& o : g.overlays) {
            out << "overlay " << o.label << ": [" << o.rect.u.lo << ", " << o.rect.u.hi << "] x [" << o.rect.v.lo
                << ", " << o.rect.v.hi << "]\n";
        }
        return out.str();
    }
    }
    return {};
}

std::string render_campaign(const CampaignResult& c, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: {
        ordered_json j;
        j["summary"] = {{"total", c.total_checks},
                        {"passed", c.passed_checks},
                        {"failed", c.failed_checks},
                        {"all_pass", c.all_pass},
                        {"text", c.summary}};
        ordered_json reports = ordered_json::array();
        for (const auto& r : c.reports) reports.push_back(report_json(r));
        j["reports"] = std::move(reports);
        ordered_json scans = ordered_json::array();
        for (const auto& s : c.scans) scans.push_back(scan_json(s));
        j["scans"] = std::move(scans);
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::string out = "kind," + std::string(kReportCsvHeader) + "\n" + reports_csv_body(c.reports, true);
        for (const auto& s : c.scans) {
            // One row per scan: lhs is the worst wrong-sign difference, rhs 0.
            const double x0 = s.rows.empty() ? 0.0 : s.rows.front().x;
            out += "scan,monotonicity," + format_number(x0) + ',' + format_number(s.a) + ',' +
                   format_number(s.worst_violation) + ",0," + format_number(s.worst_violation) + ",0,0,0,true," +
                   bool_text(s.monotone_consistent) + '\n';
        }
        return out;
    }
    case OutputFormat::human: {
        std::string out = reports_human(c.reports);
        for (const auto& s : c.scans) {
            out += "scan a=" + format_number(s.a) + ": " + (s.monotone_consistent ? "consistent" : "INCONSISTENT") +
                   " (" + s.coverage + ")\n";
        }
        out += c.summary + '\n';
        return out;
    }
    }
    return {};
}

}  // namespace gaussmono
