#pragma once

#include <array>
#include <cmath>

#include "epsmax/vec3.hpp"

namespace epsmax {

/*
 * The 16 field components at one event. E is the electric field, cB the
 * magnetic field premultiplied by c, (V0, V) the 4-vector sector and
 * (U0, U) the 4-pseudovector sector. All components share one field unit.
 *
 * Flat ordering (CSV columns, to_array/from_array):
 *   eps, beta, Ex, Ey, Ez, cBx, cBy, cBz, V0, Vx, Vy, Vz, U0, Ux, Uy, Uz
 */
struct FieldPoint {
  double eps = 0.0;
  double beta = 0.0;
  Vec3 E;
  Vec3 cB;
  double V0 = 0.0;
  Vec3 V;
  double U0 = 0.0;
  Vec3 U;

  std::array<double, 16> to_array() const {
    return {eps, beta, E.x, E.y, E.z, cB.x, cB.y, cB.z,
            V0, V.x, V.y, V.z, U0, U.x, U.y, U.z};
  }
  static FieldPoint from_array(const std::array<double, 16>& a) {
    FieldPoint f;
    f.eps = a[0]; f.beta = a[1];
    f.E = {a[2], a[3], a[4]}; f.cB = {a[5], a[6], a[7]};
    f.V0 = a[8]; f.V = {a[9], a[10], a[11]};
    f.U0 = a[12]; f.U = {a[13], a[14], a[15]};
    return f;
  }

  FieldPoint& operator+=(const FieldPoint& o);
  FieldPoint& operator*=(double s);
  bool finite() const;
};

inline FieldPoint& FieldPoint::operator+=(const FieldPoint& o) {
  eps += o.eps; beta += o.beta; E += o.E; cB += o.cB;
  V0 += o.V0; V += o.V; U0 += o.U0; U += o.U;
  return *this;
}
inline FieldPoint& FieldPoint::operator*=(double s) {
  eps *= s; beta *= s; E *= s; cB *= s; V0 *= s; V *= s; U0 *= s; U *= s;
  return *this;
}
inline FieldPoint operator+(FieldPoint a, const FieldPoint& b) { return a += b; }
inline FieldPoint operator*(double s, FieldPoint a) { return a *= s; }
inline bool FieldPoint::finite() const {
  for (double v : to_array())
    if (!std::isfinite(v)) return false;
  return true;
}

/*
 * The 16 source components: electric charge/current, hypothetical magnetic
 * charge/current, and the (s, k, l, p) sources of the vector/pseudovector
 * sector. Housed as free inputs; nothing here assumes they close the system
 * dynamically.
 *
 * Flat ordering: rho_e, jex, jey, jez, rho_m, jmx, jmy, jmz,
 *                s, kx, ky, kz, lx, ly, lz, p
 */
struct SourcePoint {
  double rho_e = 0.0;
  Vec3 j_e;
  double rho_m = 0.0;
  Vec3 j_m;
  double s = 0.0;
  Vec3 k;
  Vec3 l;
  double p = 0.0;

  std::array<double, 16> to_array() const {
    return {rho_e, j_e.x, j_e.y, j_e.z, rho_m, j_m.x, j_m.y, j_m.z,
            s, k.x, k.y, k.z, l.x, l.y, l.z, p};
  }
  static SourcePoint from_array(const std::array<double, 16>& a) {
    SourcePoint q;
    q.rho_e = a[0]; q.j_e = {a[1], a[2], a[3]};
    q.rho_m = a[4]; q.j_m = {a[5], a[6], a[7]};
    q.s = a[8]; q.k = {a[9], a[10], a[11]};
    q.l = {a[12], a[13], a[14]}; q.p = a[15];
    return q;
  }
};

// The 16 potentials: (phi, cA) for the electric sector, (Pi0, Pi) magnetic,
// (S, theta) vector, (Psi, vartheta) pseudovector.
struct PotentialPoint {
  double phi = 0.0;
  Vec3 cA;
  double Pi0 = 0.0;
  Vec3 Pi;
  double S = 0.0;
  Vec3 theta;
  double Psi = 0.0;
  Vec3 vartheta;

  std::array<double, 16> to_array() const {
    return {phi, cA.x, cA.y, cA.z, Pi0, Pi.x, Pi.y, Pi.z,
            S, theta.x, theta.y, theta.z, Psi, vartheta.x, vartheta.y, vartheta.z};
  }
  static PotentialPoint from_array(const std::array<double, 16>& a) {
    PotentialPoint p;
    p.phi = a[0]; p.cA = {a[1], a[2], a[3]};
    p.Pi0 = a[4]; p.Pi = {a[5], a[6], a[7]};
    p.S = a[8]; p.theta = {a[9], a[10], a[11]};
    p.Psi = a[12]; p.vartheta = {a[13], a[14], a[15]};
    return p;
  }

  PotentialPoint& operator+=(const PotentialPoint& o) {
    auto a = to_array(), b = o.to_array();
    for (int i = 0; i < 16; ++i) a[i] += b[i];
    *this = from_array(a);
    return *this;
  }
  PotentialPoint& operator*=(double s) {
    auto a = to_array();
    for (double& v : a) v *= s;
    *this = from_array(a);
    return *this;
  }
};

/*
 * First-derivative bundle of a FieldPoint: value, time derivative per
 * c*time (dt = d/d(ct)), and the three spatial derivatives. Residual
 * evaluators consume jets so they stay grid-agnostic and testable
 * pointwise against closed forms.
 */
struct FieldJet {
  FieldPoint value;
  FieldPoint dt;                  // d/d(ct)
  std::array<FieldPoint, 3> grad; // d/dx, d/dy, d/dz

  // d/dx^nu with x^0 = ct
  const FieldPoint& d(int nu) const { return nu == 0 ? dt : grad[nu - 1]; }
  bool finite() const {
    return value.finite() && dt.finite() && grad[0].finite() && grad[1].finite() && grad[2].finite();
  }
};

// First-derivative bundle of the potentials, same layout as FieldJet.
struct PotentialJet {
  PotentialPoint value;
  PotentialPoint dt;
  std::array<PotentialPoint, 3> grad;

  const PotentialPoint& d(int nu) const { return nu == 0 ? dt : grad[nu - 1]; }
};

// Second-order jet of the potentials: first derivatives plus the full
// (symmetric) Hessian over x^0..x^3. d2[a][b] = d^2 / dx^a dx^b.
struct PotentialJet2 {
  PotentialJet jet;
  std::array<std::array<PotentialPoint, 4>, 4> d2;
};

}  // namespace epsmax
