#pragma once

#include <functional>
#include <span>

#include "epsmax/errors.hpp"
#include "epsmax/fields.hpp"
#include "epsmax/units.hpp"
#include "epsmax/vec3.hpp"

namespace epsmax {

/*
 * Relativistic test particle with variable rest mass. State variables are
 * (x, p, m); energy and velocity are always derived, never integrated, so
 * the mass-shell identity E^2 - p^2 c^2 = m^2 c^4 holds by construction.
 * The charge q is constant during a push. One-way coupling only: particles
 * never act back on grid fields.
 */
struct ParticleState {
  double q = 0.0;
  double m = 1.0;
  Vec3 x;
  Vec3 p;

  double energy(const Units& u) const {
    const double c2 = u.c * u.c;
    return std::sqrt(m * m * c2 * c2 + norm2(p) * c2);
  }
  Vec3 velocity(const Units& u) const { return p * (u.c * u.c / energy(u)); }
  double lorentz_root(const Units& u) const {  // sqrt(1 - v^2/c^2) = m c^2 / E
    return m * u.c * u.c / energy(u);
  }
};

struct ForceAndPower {
  double dE_dt;  // q v.E - q c eps
  Vec3 dp_dt;    // q E + (q/c) v x cB - (q/c) eps v
};

ForceAndPower force_and_power(const ParticleState& s, const FieldPoint& f, const Units& u);

// dm/dt from d(mc^2)/dt = -q c eps sqrt(1 - v^2/c^2).
double mass_rate(const ParticleState& s, double eps, const Units& u);

// One volume sample of a charge distribution for the distributed rate.
struct MassRateSample {
  double rho = 0.0;  // charge density
  double eps = 0.0;  // scalar field at the sample
  Vec3 v;            // local velocity
  double dV = 0.0;   // quadrature weight (volume element)
};

// d(mc^2)/dt = -int c rho eps sqrt(1 - v^2/c^2) dV over the samples.
double distributed_mass_rate(std::span<const MassRateSample> samples, const Units& u);

using FieldSampler = std::function<FieldPoint(double t, const Vec3& x)>;

// One classical RK4 step of (x, p, m) under the sampled fields, with the
// mass updated consistently so the mass-shell identity is preserved.
// Throws MassNonPositive if the step would drive m <= 0 (step rejected)
// and NonFiniteState on blow-up.
ParticleState push(const ParticleState& s, const FieldSampler& fields, double t, double dt,
                   const Units& u);

// m c^2 / sqrt(1 - v^2/c^2) + q phi1: constant along motion in the field of
// a (possibly time-varying) source charge.
inline double interaction_invariant(const ParticleState& s, double phi1, const Units& u) {
  return s.energy(u) + s.q * phi1;
}

}  // namespace epsmax
