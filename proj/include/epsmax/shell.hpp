#pragma once

#include <string>

#include "epsmax/errors.hpp"
#include "epsmax/units.hpp"

namespace epsmax {

/*
 * Closed forms for a uniformly charged spherical shell of radius r0 whose
 * total charge follows an exponential law with time constant tau:
 * growth q(t) = q0 (1 - e^{-t/tau}) for t >= 0, decay q(t) = q0 e^{-t/tau}.
 * Everything here is the external-region (r >= r0) solution; the interior
 * is out of scope by design.
 */
enum class ShellMode { growth, decay };

struct ShellSpec {
  double q0 = 1.0;   // asymptotic charge (either sign)
  double r0 = 1.0;   // shell radius, > 0
  double tau = 1.0;  // time constant, > 0
  ShellMode mode = ShellMode::growth;

  void validate() const {
    if (!(r0 > 0.0)) throw DomainError("shell radius must be positive");
    if (!(tau > 0.0)) throw DomainError("shell time constant must be positive");
  }
};

// Charge on the shell at time t (piecewise law, exact at t <= 0).
double shell_charge(double t, const ShellSpec& spec);

// Retarded potential phi(r, t), three-branch piecewise expression,
// continuous across the branch boundaries t = (r -+ r0)/c.
// Throws DomainError for r < r0.
double shell_potential(double r, double t, const ShellSpec& spec, const Units& u);

// The scalar transient eps(r, t) = (1/c) dphi/dt; decay is the exact
// negation of growth.
double shell_epsilon(double r, double t, const ShellSpec& spec, const Units& u);

// Longitudinal electric field E_r = -dphi/dr = eps + phi/r.
double shell_radial_E(double r, double t, const ShellSpec& spec, const Units& u);

// Energy flux through the sphere of radius R integrated over all time:
// +-zeta c q0^2/(8 pi R) plus the R-independent irretrievable part. The
// sign of the first term is + for growth and - for decay.
double shell_radiated_energy(double R, const ShellSpec& spec, const Units& u);

// The R-independent part of the radiated energy (the energy carried off
// irretrievably by the leading-front layer).
double shell_irreversible_energy(const ShellSpec& spec, const Units& u);

// Rest-energy change of the shell charges driven by their own transient:
// growth returns -Delta(mc^2) (a positive energy released), decay returns
// +Delta(mc^2) (energy recovered).
double shell_rest_energy_change(const ShellSpec& spec, const Units& u);

// Coulomb field energy between two radii: zeta c q^2/(8 pi) (1/r_in - 1/r_out).
// r_outer may be infinite. Throws DomainError on ordering violations.
double coulomb_energy(double q, double r_inner, double r_outer, const Units& u);

/*
 * Time-integrated energy bookkeeping for the transient inside radius R.
 *
 * growth:  delta_rest_energy = -Delta mc^2, and
 *          residual = delta_rest_energy - w_coul - w_rad
 * decay:   delta_rest_energy = +Delta mc^2, w_coul is the released Coulomb
 *          energy, and residual = w_coul - delta_rest_energy - w_rad
 *
 * The residual vanishes identically; it is carried so the identity can be
 * asserted rather than assumed.
 */
struct EnergyLedger {
  ShellMode mode;
  double delta_rest_energy;
  double w_coul;
  double w_rad;
  double residual;
};

EnergyLedger balance_ledger(const ShellSpec& spec, double R, const Units& u);

// Mass bookkeeping of charge birth with the R -> infinity convention:
// m_e = m0 - W_Coul/c^2 - W_rad/c^2 (non-field remainder), and the total
// (non-field plus electromagnetic) mass m_e + W_Coul/c^2 = m0 - W_rad/c^2.
struct RenormalizedMasses {
  double m_e;
  double m_total;
};

RenormalizedMasses renormalization_masses(double m0, const ShellSpec& spec, const Units& u);

}  // namespace epsmax
