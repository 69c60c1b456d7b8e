#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussmono/kernel.hpp"
#include "gaussmono/quadrature.hpp"
#include "gaussmono/verify.hpp"

namespace gaussmono {

enum class OutputFormat { json, csv, human };

/// Parses "json", "csv" or "human".
std::optional<OutputFormat> parse_format(std::string_view s) noexcept;

/// 17 significant digits, locale-independent, round-trippable.
std::string format_number(double v);

/// Everything `eval` prints for one parameter point.
struct EvalRecord {
    double x = 0.0;
    double a = 0.0;
    double f = 0.0;
    double denominator = 0.0;
    double h_closed = 0.0;
    double h_separable = 0.0;
    QuadResult h_double_integral;
    double f_prime = 0.0;
    double f_small_x_limit = 0.0;
};

EvalRecord evaluate(const Params& p, const QuadSpec& spec = {});

/// The gamma grid over [-extent, extent]^2 with the core square and the full
/// integration rectangle (clipped to the grid region) as overlays.
SurfaceGrid figure_surface(const Params& p, double extent, int n);

std::string render_eval(const EvalRecord& rec, OutputFormat fmt);
std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt);
std::string render_scan(const ScanReport& scan, OutputFormat fmt);
std::string render_surface(const SurfaceGrid& grid, OutputFormat fmt);
std::string render_campaign(const CampaignResult& result, OutputFormat fmt);

/// Exact CSV header of the scan table.
inline constexpr std::string_view kScanCsvHeader = "x,a,f,h,f_prime,sign_expected,sign_observed,consistent";

}  // namespace gaussmono
