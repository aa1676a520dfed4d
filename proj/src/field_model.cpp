#include "epsmax/field_model.hpp"

#include <cmath>

namespace epsmax {

namespace {

// divergence / curl / gradient of one named member across the three
// spatial jet derivatives
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

template <typename Getter>
double pdiv_of(const std::array<PotentialPoint, 3>& g, Getter vec) {
  return vec(g[0]).x + vec(g[1]).y + vec(g[2]).z;
}
template <typename Getter>
Vec3 pcurl_of(const std::array<PotentialPoint, 3>& g, Getter vec) {
  return {vec(g[1]).z - vec(g[2]).y,
          vec(g[2]).x - vec(g[0]).z,
          vec(g[0]).y - vec(g[1]).x};
}
template <typename Getter>
Vec3 pgrad_of(const std::array<PotentialPoint, 3>& g, Getter scalar) {
  return {scalar(g[0]), scalar(g[1]), scalar(g[2])};
}

}  // namespace

std::array<double, 16> system_residual(const FieldJet& jet, const SourcePoint& src,
                                       const Units& u) {
  const FieldPoint& f = jet.value;
  const FieldPoint& dt = jet.dt;  // d/d(ct)
  const auto& g = jet.grad;
  const double kap = u.kappa, zeta = u.zeta, c = u.c;

  auto E = [](const FieldPoint& p) { return p.E; };
  auto cB = [](const FieldPoint& p) { return p.cB; };
  auto V = [](const FieldPoint& p) { return p.V; };
  auto U = [](const FieldPoint& p) { return p.U; };
  auto eps = [](const FieldPoint& p) { return p.eps; };
  auto beta = [](const FieldPoint& p) { return p.beta; };
  auto V0 = [](const FieldPoint& p) { return p.V0; };
  auto U0 = [](const FieldPoint& p) { return p.U0; };

  std::array<double, 16> r{};
  r[0] = dt.eps + div_of(g, E) - kap * f.V0 - zeta * c * src.rho_e;
  const Vec3 r9 = dt.E - curl_of(g, cB) + grad_of(g, eps) + kap * f.V + zeta * src.j_e;
  r[1] = r9.x; r[2] = r9.y; r[3] = r9.z;
  r[4] = -dt.beta + div_of(g, cB) + kap * f.U0 + zeta * c * src.rho_m;
  const Vec3 r11 = dt.cB + curl_of(g, E) - grad_of(g, beta) - kap * f.U - zeta * src.j_m;
  r[5] = r11.x; r[6] = r11.y; r[7] = r11.z;
  r[8] = dt.V0 + div_of(g, V) + kap * f.eps - zeta * src.s;
  const Vec3 r13 = dt.V - curl_of(g, U) + grad_of(g, V0) - kap * f.E + zeta * src.k;
  r[9] = r13.x; r[10] = r13.y; r[11] = r13.z;
  const Vec3 r14 = dt.U + curl_of(g, V) + grad_of(g, U0) + kap * f.cB - zeta * src.l;
  r[12] = r14.x; r[13] = r14.y; r[14] = r14.z;
  r[15] = dt.U0 + div_of(g, U) + kap * f.beta + zeta * src.p;
  return r;
}

FieldPoint fields_from_potentials(const PotentialJet& pjet, const Units& u) {
  const PotentialPoint& p = pjet.value;
  const PotentialPoint& dt = pjet.dt;  // d/d(ct)
  const auto& g = pjet.grad;
  const double kap = u.kappa;

  auto cA = [](const PotentialPoint& q) { return q.cA; };
  auto Pi = [](const PotentialPoint& q) { return q.Pi; };
  auto theta = [](const PotentialPoint& q) { return q.theta; };
  auto vth = [](const PotentialPoint& q) { return q.vartheta; };
  auto phi = [](const PotentialPoint& q) { return q.phi; };
  auto Pi0 = [](const PotentialPoint& q) { return q.Pi0; };
  auto S = [](const PotentialPoint& q) { return q.S; };
  auto Psi = [](const PotentialPoint& q) { return q.Psi; };

  FieldPoint f;
  f.eps = dt.phi + pdiv_of(g, cA) + kap * p.S;
  f.E = -1.0 * dt.cA - pgrad_of(g, phi) + pcurl_of(g, Pi) + kap * p.theta;
  f.cB = dt.Pi + pgrad_of(g, Pi0) + pcurl_of(g, cA) + kap * p.vartheta;
  f.beta = dt.Pi0 + pdiv_of(g, Pi) - kap * p.Psi;
  f.V0 = dt.S + pdiv_of(g, theta) - kap * p.phi;
  f.V = -1.0 * dt.theta + pcurl_of(g, vth) - pgrad_of(g, S) - kap * p.cA;
  f.U0 = -dt.Psi - pdiv_of(g, vth) - kap * p.Pi0;
  f.U = dt.vartheta + pcurl_of(g, theta) + pgrad_of(g, Psi) - kap * p.Pi;
  return f;
}

FieldJet field_jet_from_potentials(const PotentialJet2& pjet2, const Units& u) {
  FieldJet jet;
  jet.value = fields_from_potentials(pjet2.jet, u);
  // The defining relations are linear with constant coefficients, so the
  // derivative of the field bundle is the relation applied to the
  // differentiated potential bundle.
  for (int nu = 0; nu < 4; ++nu) {
    PotentialJet dj;
    dj.value = pjet2.jet.d(nu);
    dj.dt = pjet2.d2[nu][0];
    dj.grad = {pjet2.d2[nu][1], pjet2.d2[nu][2], pjet2.d2[nu][3]};
    const FieldPoint df = fields_from_potentials(dj, u);
    if (nu == 0)
      jet.dt = df;
    else
      jet.grad[nu - 1] = df;
  }
  return jet;
}

std::array<double, 16> potential_wave_residual(const PotentialJet2& pjet2, const SourcePoint& src,
                                               const Units& u) {
  const double kap2 = u.kappa * u.kappa, zeta = u.zeta, c = u.c;
  const auto box = [&](auto get) {
    return get(pjet2.d2[0][0]) - get(pjet2.d2[1][1]) - get(pjet2.d2[2][2]) - get(pjet2.d2[3][3]);
  };
  const PotentialPoint& p = pjet2.jet.value;

  std::array<double, 16> r{};
  r[0] = box([](const PotentialPoint& q) { return q.phi; }) + kap2 * p.phi - zeta * c * src.rho_e;
  for (int k = 0; k < 3; ++k)
    r[1 + k] = box([k](const PotentialPoint& q) { return q.cA[k]; }) + kap2 * p.cA[k] -
               zeta * src.j_e[k];
  r[4] = box([](const PotentialPoint& q) { return q.Pi0; }) + kap2 * p.Pi0 - zeta * c * src.rho_m;
  for (int k = 0; k < 3; ++k)
    r[5 + k] = box([k](const PotentialPoint& q) { return q.Pi[k]; }) + kap2 * p.Pi[k] -
               zeta * src.j_m[k];
  r[8] = box([](const PotentialPoint& q) { return q.S; }) + kap2 * p.S - zeta * src.s;
  for (int k = 0; k < 3; ++k)
    r[9 + k] = box([k](const PotentialPoint& q) { return q.theta[k]; }) + kap2 * p.theta[k] -
               zeta * src.k[k];
  r[12] = box([](const PotentialPoint& q) { return q.Psi; }) + kap2 * p.Psi - zeta * src.p;
  for (int k = 0; k < 3; ++k)
    r[13 + k] = box([k](const PotentialPoint& q) { return q.vartheta[k]; }) + kap2 * p.vartheta[k] -
                zeta * src.l[k];
  return r;
}

FieldPoint plane_wave(double eps0, double omega, const Vec3& khat, double t, const Vec3& r,
                      const Units& u) {
  const double kmag = omega / u.c;
  const double phase = omega * t - kmag * dot(khat, r);
  FieldPoint f;
  f.eps = eps0 * std::cos(phase);
  f.E = khat * f.eps;  // k (c/omega) eps0 cos = khat * eps since |k| c = omega
  return f;
}

FieldJet plane_wave_jet(double eps0, double omega, const Vec3& khat, double t, const Vec3& r,
                        const Units& u) {
  const double kmag = omega / u.c;
  const double phase = omega * t - kmag * dot(khat, r);
  const double cosv = eps0 * std::cos(phase);
  const double sinv = eps0 * std::sin(phase);
  FieldJet jet;
  jet.value.eps = cosv;
  jet.value.E = khat * cosv;
  // d/d(ct) = -(omega/c) sin, d/dx_i = + k_i sin
  jet.dt.eps = -kmag * sinv;
  jet.dt.E = khat * jet.dt.eps;
  for (int i = 0; i < 3; ++i) {
    const double dphase = kmag * khat[i] * sinv;
    jet.grad[i].eps = dphase;
    jet.grad[i].E = khat * dphase;
  }
  return jet;
}

const char* const kFieldColumnNames[16] = {"eps", "beta", "Ex", "Ey", "Ez", "cBx", "cBy", "cBz",
                                           "V0", "Vx", "Vy", "Vz", "U0", "Ux", "Uy", "Uz"};
const char* const kSourceColumnNames[16] = {"rho_e", "jex", "jey", "jez", "rho_m", "jmx", "jmy",
                                            "jmz", "s", "kx", "ky", "kz", "lx", "ly", "lz", "p"};

}  // namespace epsmax
