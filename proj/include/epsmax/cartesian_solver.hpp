#pragma once

#include <array>
#include <functional>
#include <vector>

#include "epsmax/errors.hpp"
#include "epsmax/fields.hpp"
#include "epsmax/parallel.hpp"
#include "epsmax/units.hpp"

namespace epsmax {

/*
 * 1-D Cartesian solver for the full 16-field system (d/dy = d/dz = 0),
 * kappa included. Method of lines, centered second-order differences with
 * light fourth-difference dissipation, classical RK4.
 *
 * With kappa = 0 the (eps, beta, E, cB) and (V0, V, U0, U) sectors evolve
 * independently; the update never mixes them except through the kappa
 * terms, so the decoupling is exact to round-off.
 *
 * Boundaries: periodic, or characteristic outflow (incoming invariants of
 * the eight +-c pairs pinned; exact for kappa = 0).
 */
enum class CartesianBoundary { periodic, outflow };

struct CartesianGrid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 256;  // cells; nodes x_i = x_min + i dx, i = 0..n-1 (periodic) or 0..n (outflow)
  double cfl = 0.5;
  double dissipation = 0.1;
  CartesianBoundary boundary = CartesianBoundary::periodic;

  double length() const { return x_max - x_min; }
  double dx() const { return length() / n; }
  double dt(const Units& u) const { return cfl * dx() / u.c; }
  int nodes() const { return boundary == CartesianBoundary::periodic ? n : n + 1; }
  double x(int i) const { return x_min + i * dx(); }

  void validate() const {
    if (n < 16) throw ConfigError("cartesian grid needs n >= 16");
    if (!(x_max > x_min)) throw ConfigError("cartesian grid needs x_max > x_min");
    if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("cartesian grid needs 0 < cfl <= 1");
  }
};

// Field component indices into CartesianState1D::f, following the flat
// FieldPoint ordering.
enum FieldIndex : int {
  F_eps = 0, F_beta, F_Ex, F_Ey, F_Ez, F_cBx, F_cBy, F_cBz,
  F_V0, F_Vx, F_Vy, F_Vz, F_U0, F_Ux, F_Uy, F_Uz
};

struct CartesianState1D {
  std::array<std::vector<double>, 16> f;
  double t = 0.0;

  FieldPoint at(int i) const {
    std::array<double, 16> a;
    for (int c = 0; c < 16; ++c) a[c] = f[c][i];
    return FieldPoint::from_array(a);
  }
  void set(int i, const FieldPoint& p) {
    const auto a = p.to_array();
    for (int c = 0; c < 16; ++c) f[c][i] = a[c];
  }
};

CartesianState1D cartesian_initial_zero(const CartesianGrid1D& grid);

using SourceSampler1D = std::function<SourcePoint(double t, double x)>;

// One RK4 step of size dt; null sources mean the homogeneous system.
void step_cartesian(CartesianState1D& state, const SourceSampler1D& sources,
                    const CartesianGrid1D& grid, const Units& u, double dt,
                    ThreadPool* pool = nullptr);

}  // namespace epsmax
