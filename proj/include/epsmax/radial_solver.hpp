#pragma once

#include <functional>
#include <vector>

#include "epsmax/errors.hpp"
#include "epsmax/parallel.hpp"
#include "epsmax/shell.hpp"
#include "epsmax/units.hpp"

namespace epsmax {

/*
 * Spherically symmetric solver for the massless electric subsystem with a
 * non-conserved shell charge at r0:
 *
 *   (1/c) deps/dt = zeta c rho - (1/r^2) d(r^2 E_r)/dr
 *   (1/c) dE_r/dt = -deps/dr
 *
 * Method of lines: centered second-order differences in r (conservative
 * form for the r^2 E_r term), classical RK4 in time, plus a small
 * fourth-difference dissipation that damps mesh-frequency ringing shed by
 * the transient front.
 *
 * The mesh covers [r0 - 3 dr, r_max]: the charge is deposited as a top-hat
 * over the four cells centered on r0 (a one-sided hat would bias the charge
 * centroid by 2 dr and cost an order of convergence), and one clear vacuum
 * node separates the hat from the inner edge.
 *
 * Boundaries use characteristic closures in the exact spherical invariants
 * w+- = r (eps +- E_r) -+ phi, with the boundary potential integrated along
 * as dphi/dt = c eps:
 *   - outer: no incoming radiation, w- = r(eps - E_r) + phi = 0, which is
 *     exact for any outgoing wave plus a static Coulomb tail;
 *   - inner: the vacuum interior r < r_in returns every ingoing wave
 *     delayed by 2 r_in / c and negated (regular reflection through the
 *     origin), so w+(t) = -w-(t - 2 r_in / c) from recorded history.
 */
struct RadialGrid {
  double r0 = 1.0;     // shell radius = inner edge of the reported domain
  double r_max = 10.0; // outer radius
  int n = 512;         // nodes spanning [r0, r_max]
  double cfl = 0.5;
  double dissipation = 0.1;  // Kreiss-Oliger coefficient

  static constexpr int kInnerExtra = 3;  // nodes below r0

  double dr() const { return (r_max - r0) / (n - 1); }
  double dt(const Units& u) const { return cfl * dr() / u.c; }
  int total_nodes() const { return n + kInnerExtra; }
  double r_inner() const { return r0 - kInnerExtra * dr(); }
  // radius of internal node i (i = kInnerExtra is the node at r0)
  double radius(int i) const { return r0 + (i - kInnerExtra) * dr(); }

  void validate() const {
    if (n < 16) throw ConfigError("radial grid needs n >= 16");
    if (!(r0 > 0.0) || !(r_max > r0)) throw ConfigError("radial grid needs r_max > r0 > 0");
    if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("radial grid needs 0 < cfl <= 1");
    if (!(r_inner() > 0.25 * r0))
      throw ConfigError("radial grid too coarse: inner extension reaches toward the origin");
  }
};

// Ingoing-invariant history at the inner boundary, sampled once per
// completed step; queries interpolate with 4-point Lagrange stencils.
// Before the first sample the pre-transient (static) value is returned.
class BoundaryHistory {
 public:
  void reset(double t0, double value0) {
    times_.assign(1, t0);
    values_.assign(1, value0);
  }
  void append(double t, double value) {
    times_.push_back(t);
    values_.push_back(value);
  }

  struct Sample {
    double value;
    double rate;
  };
  Sample query(double t) const;

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

struct RadialState {
  std::vector<double> eps;  // over internal nodes
  std::vector<double> E;    // radial field over internal nodes
  double t = 0.0;
  double phi_in = 0.0;   // potential at the inner boundary node
  double phi_out = 0.0;  // potential at the outer boundary node
  BoundaryHistory history;
};

using ChargeLaw = std::function<double(double t)>;

// Zero-field initial state (used for growth transients).
RadialState radial_initial_zero(const RadialGrid& grid, const Units& u);

// Static field of charge q deposited with the solver's own top-hat profile
// (used for decay transients and equilibrium tests).
RadialState radial_initial_static(const RadialGrid& grid, double q, const Units& u);

// Normalized deposition profile g_i (node weights, discrete integral
// sum_i g_i 4 pi r_i^2 w_i dr = 1 with trapezoid weights); rho_i = q(t) g_i.
std::vector<double> deposition_profile(const RadialGrid& grid);

// Advance one RK4 step of size dt. Throws CflViolation if dt exceeds the
// grid's CFL bound and NonFiniteState on blow-up.
void step_radial(RadialState& state, const ChargeLaw& charge, const RadialGrid& grid,
                 const Units& u, double dt, ThreadPool* pool = nullptr);

}  // namespace epsmax
