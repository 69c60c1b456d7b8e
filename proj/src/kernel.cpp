#include "gaussmono/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace gaussmono {

double gamma(double u, double v) noexcept {
    const double d = u - v;
    return 2.0 * (u + v) * (d * d);
}

double gamma_tilde(double u, double v) noexcept { return 4.0 * (u * u * u - u * v * v); }

std::pair<double, double> symmetrize_check(double u, double v) noexcept {
    return {gamma(u, v), 0.5 * (gamma_tilde(u, v) + gamma_tilde(v, u))};
}

double symmetrize_scale(double u, double v) noexcept {
    const double au = std::abs(u);
    const double av = std::abs(v);
    return 2.0 * (au * au * au + au * av * av + av * av * av + av * au * au);
}

double antisymmetry_residual(double u, double v) noexcept { return gamma(u, v) + gamma(-u, -v); }

int sign_region(double u, double v) noexcept {
    if (u == v) return 0;
    const double s = u + v;
    if (s > 0.0) return 1;
    if (s < 0.0) return -1;
    return 0;
}

int Decomposition::locate(double u, double v) const noexcept {
    if (!full.contains(u, v)) return -1;
    if (core.contains(u, v)) return 0;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        if (strips[i].contains(u, v)) return static_cast<int>(i) + 1;
    }
    return -1;
}

Decomposition decompose_rectangle(const Params& p) {
    const double x = p.x();
    const double ax = p.ax();
    const double m = std::min(x, ax);

    Decomposition d;
    d.full = {{-x, ax}, {-x, ax}};
    d.core = {{-m, m}, {-m, m}};
    if (ax > x) {
        d.strip_sign = 1;
        d.strips = {Rect{{x, ax}, {-x, ax}}, Rect{{-x, x}, {x, ax}}};
    } else if (ax < x) {
        d.strip_sign = -1;
        d.strips = {Rect{{-x, -ax}, {-x, ax}}, Rect{{-ax, ax}, {-x, -ax}}};
    }
    return d;
}

double lattice_point(const Interval& iv, int n, int i) noexcept {
    const double k = static_cast<double>(n - 1 - i);
    const double j = static_cast<double>(i);
    return (k * iv.lo + j * iv.hi) / static_cast<double>(n - 1);
}

double SurfaceGrid::u_at(int i) const noexcept { return lattice_point(region.u, n_u, i); }

double SurfaceGrid::v_at(int j) const noexcept { return lattice_point(region.v, n_v, j); }

SurfaceGrid surface_grid(const Rect& region, int n_u, int n_v) {
    if (n_u < 2 || n_v < 2) throw DomainError("surface_grid: counts must be >= 2");
    if (!region.valid() || !(region.u.lo < region.u.hi) || !(region.v.lo < region.v.hi)) {
        throw DomainError("surface_grid: degenerate region");
    }
    SurfaceGrid g;
    g.region = region;
    g.n_u = n_u;
    g.n_v = n_v;
    g.values.resize(static_cast<std::size_t>(n_u) * n_v);
    for (int i = 0; i < n_u; ++i) {
        const double u = g.u_at(i);
        for (int j = 0; j < n_v; ++j) {
            g.values[static_cast<std::size_t>(i) * n_v + j] = gamma(u, g.v_at(j));
        }
    }
    return g;
}

}  // namespace gaussmono
