#pragma once

#include <utility>
#include <vector>

#include "epsmax/errors.hpp"
#include "epsmax/fields.hpp"
#include "epsmax/units.hpp"
#include "epsmax/vec3.hpp"

namespace epsmax {

// Pointwise energy/momentum bookkeeping of the full 16-field system.
struct EnergyMomentumSample {
  double energy_density = 0.0;      // [E^2 + c^2B^2 + eps^2 + beta^2 + V^2 + U^2 + V0^2 + U0^2]/(2 zeta c)
  Vec3 energy_flux;                 // [E x cB + eps E - beta cB + V0 V + U0 U + V x U]/zeta
  Vec3 momentum_density;            // [E x cB - eps E + beta cB + U x V + V0 V + U0 U]/(zeta c^2)
  Mat3 stress;                      // T^{ij}, antisymmetric terms included as written
  double interaction_power = 0.0;   // E.j_e - eps c rho_e - cB.j_m - beta c rho_m + V.k - U.l - V0 s + U0 p
  Vec3 interaction_force;           // per-volume force on charges and currents
};

struct EnergyLawTerms {
  double density;
  double interaction_power;
  Vec3 flux;
};

struct MomentumLawTerms {
  Vec3 momentum_density;
  Vec3 force_density;
  Mat3 stress;
};

EnergyLawTerms energy_law_terms(const FieldPoint& f, const SourcePoint& src, const Units& u);
MomentumLawTerms momentum_law_terms(const FieldPoint& f, const SourcePoint& src, const Units& u);

EnergyMomentumSample energy_momentum_sample(const FieldPoint& f, const SourcePoint& src,
                                            const Units& u);

// LHS - RHS of the two conservation identities evaluated directly from a
// jet (time derivative of the density plus interaction term plus flux or
// stress divergence). Both vanish identically on any jet satisfying the
// field equations with the given sources.
std::pair<double, Vec3> divergence_identity_residual(const FieldJet& jet, const SourcePoint& src,
                                                     const Units& u);

/*
 * Discrete energy balance of the massless electric subsystem over a solver
 * run:  d/dt int (E^2+eps^2)/(2 zeta c) dV - int eps c rho dV
 *       + surface flux of eps E / zeta  =  residual.
 * The volume/flux integrals are produced by the solver (midpoint rule on
 * its grid); differencing in time is trapezoidal.
 */
struct BalanceSeries {
  std::vector<double> t;
  std::vector<double> field_energy;   // int (E^2+eps^2)/(2 zeta c) dV
  std::vector<double> source_power;   // int eps c rho dV
  std::vector<double> boundary_flux;  // closed-surface integral of eps E_r / zeta
};

struct BalanceReport {
  std::vector<double> t_mid;      // midpoints of consecutive records
  std::vector<double> residual;   // dW/dt - P + F at each midpoint
  double max_abs_residual = 0.0;
  // time-integrated ledger over the record window
  double released_rest_energy = 0.0;  // int P dt  (= -Delta mc^2 for growth)
  double field_energy_change = 0.0;   // W(end) - W(begin)
  double radiated_through_R = 0.0;    // int F dt
};

BalanceReport discrete_balance(const BalanceSeries& series);

}  // namespace epsmax
