#include "gaussmono/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace gaussmono {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Rounding floor added to every panel estimate, in units of eps * sum |w f|.
constexpr double kRoundoffFactor = 50.0;

struct PanelEstimate {
    double value = 0.0;
    double err = 0.0;
    long evaluations = 0;
};

template <typename Region>
struct Panel {
    Region region;
    PanelEstimate est;
    bool live = true;
};

// Shared adaptive driver: repeatedly replaces the worst panel by its children.
template <typename Region, typename Eval, typename Split>
QuadResult adapt(const Region& root, const QuadSpec& spec, Eval&& eval, Split&& split) {
    std::vector<Panel<Region>> panels;
    using Entry = std::pair<double, std::size_t>;
    // Ties are broken by the lower index so that refinement order is reproducible.
    auto worse = [](const Entry& l, const Entry& r) {
        return l.first < r.first || (l.first == r.first && l.second > r.second);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);

    QuadResult result;
    double total = 0.0;
    double total_err = 0.0;
    auto push = [&](const Region& region) {
        PanelEstimate e = eval(region);
        result.evaluations += e.evaluations;
        total += e.value;
        total_err += e.err;
        panels.push_back({region, e, true});
        queue.push({e.err, panels.size() - 1});
    };

    push(root);
    std::size_t live = 1;
    auto target = [&](double v) { return std::max(spec.abs_tol, spec.rel_tol * std::abs(v)); };

    while (total_err > target(total)) {
        const std::vector<Region> children = split(panels[queue.top().second].region);
        if (live - 1 + children.size() > static_cast<std::size_t>(spec.max_panels)) break;
        const std::size_t worst = queue.top().second;
        queue.pop();
        panels[worst].live = false;
        total -= panels[worst].est.value;
        total_err = std::max(0.0, total_err - panels[worst].est.err);
        for (const Region& c : children) push(c);
        live += children.size() - 1;
    }

    // Re-sum the surviving panels in creation order to shed running-sum drift.
    result.value = 0.0;
    result.err_estimate = 0.0;
    for (const auto& pnl : panels) {
        if (!pnl.live) continue;
        result.value += pnl.est.value;
        result.err_estimate += pnl.est.err;
    }
    result.converged = result.err_estimate <= target(result.value);
    return result;
}

struct RulePair {
    GaussLegendreRule high;
    GaussLegendreRule low;

    explicit RulePair(int order)
        : high(GaussLegendreRule::make(order)), low(GaussLegendreRule::make(std::max(1, order / 2))) {}
};

PanelEstimate eval_1d(const Integrand1d& f, const Interval& iv, const RulePair& rules) {
    const double c = 0.5 * (iv.lo + iv.hi);
    const double h = 0.5 * (iv.hi - iv.lo);
    double hi_sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rules.high.nodes.size(); ++i) {
        const double wf = rules.high.weights[i] * f(c + h * rules.high.nodes[i]);
        hi_sum += wf;
        abs_sum += std::abs(wf);
    }
    double lo_sum = 0.0;
    for (std::size_t i = 0; i < rules.low.nodes.size(); ++i) {
        lo_sum += rules.low.weights[i] * f(c + h * rules.low.nodes[i]);
    }
    PanelEstimate e;
    e.value = h * hi_sum;
    e.err = std::abs(h * (hi_sum - lo_sum)) + kRoundoffFactor * kEps * std::abs(h) * abs_sum;
    e.evaluations = static_cast<long>(rules.high.nodes.size() + rules.low.nodes.size());
    return e;
}

double tensor_sum(const Integrand2d& f, const Rect& r, const GaussLegendreRule& rule, double* abs_sum) {
    const double cu = 0.5 * (r.u.lo + r.u.hi);
    const double hu = 0.5 * (r.u.hi - r.u.lo);
    const double cv = 0.5 * (r.v.lo + r.v.hi);
    const double hv = 0.5 * (r.v.hi - r.v.lo);
    double sum = 0.0;
    double asum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = cu + hu * rule.nodes[i];
        double row = 0.0;
        double arow = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double wf = rule.weights[j] * f(u, cv + hv * rule.nodes[j]);
            row += wf;
            arow += std::abs(wf);
        }
        sum += rule.weights[i] * row;
        asum += rule.weights[i] * arow;
    }
    if (abs_sum != nullptr) *abs_sum = hu * hv * asum;
    return hu * hv * sum;
}

PanelEstimate eval_2d(const Integrand2d& f, const Rect& r, const RulePair& rules) {
    double abs_sum = 0.0;
    const double hi = tensor_sum(f, r, rules.high, &abs_sum);
    const double lo = tensor_sum(f, r, rules.low, nullptr);
    PanelEstimate e;
    e.value = hi;
    e.err = std::abs(hi - lo) + kRoundoffFactor * kEps * std::abs(abs_sum);
    const auto nh = static_cast<long>(rules.high.nodes.size());
    const auto nl = static_cast<long>(rules.low.nodes.size());
    e.evaluations = nh * nh + nl * nl;
    return e;
}

void require_valid(const Interval& iv) {
    if (!iv.valid()) throw DomainError("integration interval is invalid");
}

double h_integrand(double u, double v) { return phi(u) * phi(v) * gamma(u, v); }

Rect square(const Interval& iv) { return {iv, iv}; }

}  // namespace

void QuadSpec::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) throw DomainError("abs_tol must be > 0");
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) throw DomainError("rel_tol must be > 0");
    if (max_panels < 1) throw DomainError("max_panels must be >= 1");
    if (panel_order < 2) throw DomainError("panel_order must be >= 2");
}

GaussLegendreRule GaussLegendreRule::make(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) <= 1e-17) break;
        }
        // Recompute the derivative at the converged node for the weight.
        {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -z;
        rule.nodes[hi] = z;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

QuadResult integrate_1d(const Integrand1d& integrand, const Interval& iv, const QuadSpec& spec) {
    spec.validate();
    require_valid(iv);
    const RulePair rules(spec.panel_order);
    return adapt(
        iv, spec, [&](const Interval& piece) { return eval_1d(integrand, piece, rules); },
        [](const Interval& piece) {
            const double mid = 0.5 * (piece.lo + piece.hi);
            return std::vector<Interval>{{piece.lo, mid}, {mid, piece.hi}};
        });
}

QuadResult integrate_2d(const Integrand2d& integrand, const Rect& r, const QuadSpec& spec) {
    spec.validate();
    require_valid(r.u);
    require_valid(r.v);
    const RulePair rules(spec.panel_order);
    return adapt(
        r, spec, [&](const Rect& piece) { return eval_2d(integrand, piece, rules); },
        [](const Rect& piece) {
            const double mu = 0.5 * (piece.u.lo + piece.u.hi);
            const double mv = 0.5 * (piece.v.lo + piece.v.hi);
            return std::vector<Rect>{
                {{piece.u.lo, mu}, {piece.v.lo, mv}},
                {{piece.u.lo, mu}, {mv, piece.v.hi}},
                {{mu, piece.u.hi}, {piece.v.lo, mv}},
                {{mu, piece.u.hi}, {mv, piece.v.hi}},
            };
        });
}

QuadResult h_double_integral(const Params& p, const QuadSpec& spec) {
    return integrate_2d(h_integrand, square(p.interval()), spec);
}

std::pair<QuadResult, QuadResult> h_tilde_integrals(const Params& p, const QuadSpec& spec) {
    const Rect r = square(p.interval());
    auto uv = integrate_2d([](double u, double v) { return phi(u) * phi(v) * gamma_tilde(u, v); }, r, spec);
    auto vu = integrate_2d([](double u, double v) { return phi(u) * phi(v) * gamma_tilde(v, u); }, r, spec);
    return {uv, vu};
}

double DecompositionIntegrals::total() const noexcept {
    double t = core.value;
    for (const auto& s : strips) t += s.value;
    return t;
}

double DecompositionIntegrals::total_err_estimate() const noexcept {
    double t = core.err_estimate;
    for (const auto& s : strips) t += s.err_estimate;
    return t;
}

bool DecompositionIntegrals::converged() const noexcept {
    return core.converged && std::all_of(strips.begin(), strips.end(), [](const QuadResult& s) { return s.converged; });
}

DecompositionIntegrals integrate_decomposition(const Params& p, const QuadSpec& spec) {
    const Decomposition d = decompose_rectangle(p);
    DecompositionIntegrals out;
    out.core = integrate_2d(h_integrand, d.core, spec);
    for (const Rect& s : d.strips) out.strips.push_back(integrate_2d(h_integrand, s, spec));
    return out;
}

}  // namespace gaussmono
