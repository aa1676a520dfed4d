#include "epsmax/conservation.hpp"

#include <cmath>

namespace epsmax {

namespace {

// directional derivatives of the quadratic flux/stress expressions come
// from the product rule; these helpers pick members out of jet gradients
template <typename Getter>
double div_of(const std::array<FieldPoint, 3>& g, Getter vec) {
  return vec(g[0]).x + vec(g[1]).y + vec(g[2]).z;
}
template <typename Getter>
Vec3 curl_of(const std::array<FieldPoint, 3>& g, Getter vec) {
  return {vec(g[1]).z - vec(g[2]).y,
          vec(g[2]).x - vec(g[0]).z,
          vec(g[0]).y - vec(g[1]).x};
}
template <typename Getter>
Vec3 grad_of(const std::array<FieldPoint, 3>& g, Getter scalar) {
  return {scalar(g[0]), scalar(g[1]), scalar(g[2])};
}

// curl of (a * w) for scalar field a and vector field w
Vec3 curl_scaled(double a, const Vec3& w, const Vec3& grad_a, const Vec3& curl_w) {
  return cross(grad_a, w) + a * curl_w;
}

}  // namespace

EnergyLawTerms energy_law_terms(const FieldPoint& f, const SourcePoint& src, const Units& u) {
  EnergyLawTerms out;
  const double sum2 = norm2(f.E) + norm2(f.cB) + f.eps * f.eps + f.beta * f.beta + norm2(f.V) +
                      norm2(f.U) + f.V0 * f.V0 + f.U0 * f.U0;
  out.density = sum2 / (2.0 * u.zeta * u.c);
  out.interaction_power = dot(f.E, src.j_e) - f.eps * u.c * src.rho_e - dot(f.cB, src.j_m) -
                          f.beta * u.c * src.rho_m + dot(f.V, src.k) - dot(f.U, src.l) -
                          f.V0 * src.s + f.U0 * src.p;
  out.flux = (cross(f.E, f.cB) + f.eps * f.E - f.beta * f.cB + f.V0 * f.V + f.U0 * f.U +
              cross(f.V, f.U)) /
             u.zeta;
  return out;
}

MomentumLawTerms momentum_law_terms(const FieldPoint& f, const SourcePoint& src, const Units& u) {
  MomentumLawTerms out;
  out.momentum_density = (cross(f.E, f.cB) - f.eps * f.E + f.beta * f.cB + cross(f.U, f.V) +
                          f.V0 * f.V + f.U0 * f.U) /
                         (u.zeta * u.c * u.c);
  out.force_density = (u.c * src.rho_e * f.E + cross(src.j_e, f.cB) - u.c * src.rho_m * f.cB +
                       cross(src.j_m, f.E) - f.eps * src.j_e - f.beta * src.j_m - src.s * f.V +
                       src.p * f.U + f.V0 * src.k - f.U0 * src.l + cross(f.U, src.k) +
                       cross(f.V, src.l)) /
                      u.c;

  // T^{ij}: diagonal terms with the 3-D Kronecker delta, antisymmetric
  // eps^{ijk} terms as written
  const double em_trace = norm2(f.E) + norm2(f.cB) - f.eps * f.eps - f.beta * f.beta;
  const double vu_trace = norm2(f.V) + norm2(f.U) - f.V0 * f.V0 - f.U0 * f.U0;
  const Vec3 em_axial = f.beta * f.E + f.eps * f.cB;
  const Vec3 vu_axial = f.U0 * f.V - f.V0 * f.U;
  const double inv_zc = 1.0 / (u.zeta * u.c);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double t = f.E[i] * f.E[j] + f.cB[i] * f.cB[j] - f.V[i] * f.V[j] - f.U[i] * f.U[j];
      if (i == j) t += 0.5 * (vu_trace - em_trace);
      // -eps^{ijk} (em_axial_k + vu_axial_k)
      const int k = 3 - i - j;
      if (i != j) {
        const double lc = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;  // eps^{ijk}, cyclic
        t -= lc * (em_axial[k] + vu_axial[k]);
      }
      out.stress[i][j] = t * inv_zc;
    }
  }
  return out;
}

EnergyMomentumSample energy_momentum_sample(const FieldPoint& f, const SourcePoint& src,
                                            const Units& u) {
  const auto e = energy_law_terms(f, src, u);
  const auto m = momentum_law_terms(f, src, u);
  return {e.density, e.flux, m.momentum_density, m.stress, e.interaction_power, m.force_density};
}

std::pair<double, Vec3> divergence_identity_residual(const FieldJet& jet, const SourcePoint& src,
                                                     const Units& u) {
  const FieldPoint& f = jet.value;
  const FieldPoint& dt = jet.dt;  // per c t
  const auto& g = jet.grad;
  const double zeta = u.zeta, c = u.c;

  auto E = [](const FieldPoint& p) { return p.E; };
  auto cB = [](const FieldPoint& p) { return p.cB; };
  auto V = [](const FieldPoint& p) { return p.V; };
  auto U = [](const FieldPoint& p) { return p.U; };
  auto eps = [](const FieldPoint& p) { return p.eps; };
  auto beta = [](const FieldPoint& p) { return p.beta; };
  auto V0 = [](const FieldPoint& p) { return p.V0; };
  auto U0 = [](const FieldPoint& p) { return p.U0; };

  // --- energy identity ---
  // d/dt of the density: sum f . (df/dt) / (zeta c), with d/dt = c d/d(ct)
  const double ddens_dt = (dot(f.E, dt.E) + dot(f.cB, dt.cB) + f.eps * dt.eps + f.beta * dt.beta +
                           dot(f.V, dt.V) + dot(f.U, dt.U) + f.V0 * dt.V0 + f.U0 * dt.U0) /
                          zeta;
  const double power = energy_law_terms(f, src, u).interaction_power;
  // div flux via product rule
  double div_flux = 0.0;
  for (int i = 0; i < 3; ++i) {
    const FieldPoint& gi = g[i];
    const Vec3 dflux = cross(gi.E, f.cB) + cross(f.E, gi.cB) + gi.eps * f.E + f.eps * gi.E -
                       gi.beta * f.cB - f.beta * gi.cB + gi.V0 * f.V + f.V0 * gi.V +
                       gi.U0 * f.U + f.U0 * gi.U + cross(gi.V, f.U) + cross(f.V, gi.U);
    div_flux += dflux[i];
  }
  div_flux /= zeta;
  const double energy_residual = ddens_dt + power + div_flux;

  // --- momentum identity ---
  // d/dt of the momentum density, times c^2 zeta -> work in x0 units and
  // divide once at the end
  const Vec3 dmom_dt = (cross(dt.E, f.cB) + cross(f.E, dt.cB) - dt.eps * f.E - f.eps * dt.E +
                        dt.beta * f.cB + f.beta * dt.cB + cross(dt.U, f.V) + cross(f.U, dt.V) +
                        dt.V0 * f.V + f.V0 * dt.V + dt.U0 * f.U + f.U0 * dt.U) /
                       (zeta * c);
  const Vec3 force = momentum_law_terms(f, src, u).force_density;

  // div T from the explicit vector form:
  //   E div E - E x curl E + cB div cB - cB x curl cB - curl(eps cB)
  //   - curl(beta E) + eps grad eps + beta grad beta
  //   - V div V + V x curl V - U div U + U x curl U + curl(V0 U)
  //   - curl(U0 V) - V0 grad V0 - U0 grad U0,  all over zeta c
  const Vec3 curlE = curl_of(g, E), curlB = curl_of(g, cB);
  const Vec3 curlV = curl_of(g, V), curlU = curl_of(g, U);
  const Vec3 divT =
      (f.E * div_of(g, E) - cross(f.E, curlE) + f.cB * div_of(g, cB) - cross(f.cB, curlB) -
       curl_scaled(f.eps, f.cB, grad_of(g, eps), curlB) -
       curl_scaled(f.beta, f.E, grad_of(g, beta), curlE) + f.eps * grad_of(g, eps) +
       f.beta * grad_of(g, beta) - f.V * div_of(g, V) + cross(f.V, curlV) - f.U * div_of(g, U) +
       cross(f.U, curlU) + curl_scaled(f.V0, f.U, grad_of(g, V0), curlU) -
       curl_scaled(f.U0, f.V, grad_of(g, U0), curlV) - f.V0 * grad_of(g, V0) -
       f.U0 * grad_of(g, U0)) /
      (zeta * c);

  // dmom_dt is already d/dt of the momentum density: the jet's d/d(ct)
  // entries supply one factor of 1/c, the 1/(zeta c) prefactor the rest.
  const Vec3 momentum_residual = dmom_dt + force - divT;
  return {energy_residual, momentum_residual};
}

BalanceReport discrete_balance(const BalanceSeries& s) {
  const size_t n = s.t.size();
  if (s.field_energy.size() != n || s.source_power.size() != n || s.boundary_flux.size() != n)
    throw GridMismatch("balance series column lengths differ");
  if (n < 2) throw GridMismatch("balance series needs at least two records");

  BalanceReport rep;
  rep.t_mid.reserve(n - 1);
  rep.residual.reserve(n - 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    const double dt = s.t[k + 1] - s.t[k];
    if (!(dt > 0.0)) throw GridMismatch("balance series times must increase");
    const double dWdt = (s.field_energy[k + 1] - s.field_energy[k]) / dt;
    const double P = 0.5 * (s.source_power[k] + s.source_power[k + 1]);
    const double F = 0.5 * (s.boundary_flux[k] + s.boundary_flux[k + 1]);
    const double r = dWdt - P + F;
    rep.t_mid.push_back(0.5 * (s.t[k] + s.t[k + 1]));
    rep.residual.push_back(r);
    rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(r));
    rep.released_rest_energy += P * dt;
    rep.radiated_through_R += F * dt;
  }
  rep.field_energy_change = s.field_energy.back() - s.field_energy.front();
  return rep;
}

}  // namespace epsmax
