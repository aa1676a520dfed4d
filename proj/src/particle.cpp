#include "epsmax/particle.hpp"

#include <cmath>

namespace epsmax {

ForceAndPower force_and_power(const ParticleState& s, const FieldPoint& f, const Units& u) {
  const Vec3 v = s.velocity(u);
  ForceAndPower out;
  out.dE_dt = s.q * dot(v, f.E) - s.q * u.c * f.eps;
  out.dp_dt = s.q * f.E + (s.q / u.c) * cross(v, f.cB) - (s.q / u.c) * f.eps * v;
  return out;
}

double mass_rate(const ParticleState& s, double eps, const Units& u) {
  // d(mc^2)/dt = -q c eps sqrt(1 - v^2/c^2)
  return -s.q * eps * s.lorentz_root(u) / u.c;
}

double distributed_mass_rate(std::span<const MassRateSample> samples, const Units& u) {
  double sum = 0.0;
  for (const auto& smp : samples) {
    const double root = std::sqrt(std::max(0.0, 1.0 - norm2(smp.v) / (u.c * u.c)));
    sum += smp.rho * smp.eps * root * smp.dV;
  }
  return -u.c * sum;
}

namespace {

struct Deriv {
  Vec3 dx;
  Vec3 dp;
  double dm;
};

Deriv rates(const ParticleState& base, const Vec3& x, const Vec3& p, double m,
            const FieldSampler& fields, double t, const Units& u) {
  if (m <= 0.0) throw MassNonPositive("particle rest mass reached zero during a step");
  ParticleState s = base;
  s.x = x;
  s.p = p;
  s.m = m;
  const FieldPoint f = fields(t, x);
  const auto fp = force_and_power(s, f, u);
  return {s.velocity(u), fp.dp_dt, mass_rate(s, f.eps, u)};
}

}  // namespace

ParticleState push(const ParticleState& s, const FieldSampler& fields, double t, double dt,
                   const Units& u) {
  const Deriv k1 = rates(s, s.x, s.p, s.m, fields, t, u);
  const Deriv k2 = rates(s, s.x + 0.5 * dt * k1.dx, s.p + 0.5 * dt * k1.dp, s.m + 0.5 * dt * k1.dm,
                         fields, t + 0.5 * dt, u);
  const Deriv k3 = rates(s, s.x + 0.5 * dt * k2.dx, s.p + 0.5 * dt * k2.dp, s.m + 0.5 * dt * k2.dm,
                         fields, t + 0.5 * dt, u);
  const Deriv k4 = rates(s, s.x + dt * k3.dx, s.p + dt * k3.dp, s.m + dt * k3.dm, fields, t + dt, u);

  ParticleState out = s;
  const double w = dt / 6.0;
  out.x = s.x + w * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  out.p = s.p + w * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  out.m = s.m + w * (k1.dm + 2.0 * (k2.dm + k3.dm) + k4.dm);
  if (out.m <= 0.0)
    throw MassNonPositive("particle rest mass would cross zero; step rejected");
  if (!std::isfinite(out.m) || !std::isfinite(norm2(out.x)) || !std::isfinite(norm2(out.p)))
    throw NonFiniteState("particle state became non-finite");
  return out;
}

}  // namespace epsmax
