#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaussmono/formulas.hpp"
#include "gaussmono/specfun.hpp"

namespace gaussmono {

/// Axis-aligned rectangle u x v.
struct Rect {
    Interval u;
    Interval v;

    [[nodiscard]] bool valid() const noexcept { return u.valid() && v.valid(); }
    [[nodiscard]] double area() const noexcept { return u.length() * v.length(); }
    [[nodiscard]] bool contains(double pu, double pv) const noexcept {
        return u.contains(pu) && v.contains(pv);
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Gamma(u, v) = 2 (u + v) (u - v)^2, the symmetrized kernel.
double gamma(double u, double v) noexcept;

/// Gamma~(u, v) = 4 (u^3 - u v^2), the kernel read off the separable form of h.
double gamma_tilde(double u, double v) noexcept;

/// (gamma(u, v), (gamma_tilde(u, v) + gamma_tilde(v, u)) / 2).
std::pair<double, double> symmetrize_check(double u, double v) noexcept;

/// Magnitude of the terms summed in the symmetrized form. Rounding error of
/// either side of symmetrize_check is a small multiple of eps times this.
double symmetrize_scale(double u, double v) noexcept;

/// gamma(u, v) + gamma(-u, -v); zero in exact and in floating-point arithmetic.
double antisymmetry_residual(double u, double v) noexcept;

/// Sign of gamma: +1 above the anti-diagonal, -1 below, 0 on u = -v or u = v.
int sign_region(double u, double v) noexcept;

/// Split of the rectangle [-x, a x]^2 into the origin-symmetric core square
/// and the sign-definite remainder.
struct Decomposition {
    Rect full;
    Rect core;                ///< [-m, m]^2 with m = min(x, a x)
    std::vector<Rect> strips; ///< empty when a == 1
    int strip_sign = 0;       ///< sign(a - 1)

    /// Index of the piece that owns (u, v): 0 for the core, 1.. for strips,
    /// -1 outside. Boundary points go to the first containing piece.
    [[nodiscard]] int locate(double u, double v) const noexcept;
};

Decomposition decompose_rectangle(const Params& p);

/// Labelled rectangle drawn on top of a surface plot.
struct Overlay {
    std::string label;
    Rect rect;
};

/// gamma sampled on a regular lattice including the endpoints.
struct SurfaceGrid {
    Rect region;
    int n_u = 0;
    int n_v = 0;
    std::vector<double> values;  ///< row-major: values[i * n_v + j] = gamma(u_i, v_j)
    std::vector<Overlay> overlays;

    [[nodiscard]] double u_at(int i) const noexcept;
    [[nodiscard]] double v_at(int j) const noexcept;
    [[nodiscard]] double at(int i, int j) const { return values.at(static_cast<std::size_t>(i) * n_v + j); }
};

/// Lattice point i of n on [lo, hi]. Mirror-exact: lattice_point(iv, n, n-1-i)
/// is the exact negation of lattice_point(iv, n, i) when lo == -hi.
double lattice_point(const Interval& iv, int n, int i) noexcept;

/// Throws DomainError on a degenerate region or counts < 2.
SurfaceGrid surface_grid(const Rect& region, int n_u, int n_v);

}  // namespace gaussmono
