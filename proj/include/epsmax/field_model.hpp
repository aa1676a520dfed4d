#pragma once

#include <array>

#include "epsmax/fields.hpp"
#include "epsmax/units.hpp"
#include "epsmax/vec3.hpp"

namespace epsmax {

/*
 * Pointwise residuals of the sourced 3-D system. Ordering of the 16 output
 * entries (LHS - RHS; zero iff the point satisfies the system):
 *
 *   0      (1/c) deps/dt + div E - kappa V0 - zeta c rho_e
 *   1..3   (1/c) dE/dt - curl cB + grad eps + kappa V + zeta j_e
 *   4      -(1/c) dbeta/dt + div cB + kappa U0 + zeta c rho_m
 *   5..7   (1/c) dcB/dt + curl E - grad beta - kappa U - zeta j_m
 *   8      (1/c) dV0/dt + div V + kappa eps - zeta s
 *   9..11  (1/c) dV/dt - curl U + grad V0 - kappa E + zeta k
 *   12..14 (1/c) dU/dt + curl V + grad U0 + kappa cB - zeta l
 *   15     (1/c) dU0/dt + div U + kappa beta + zeta p
 */
std::array<double, 16> system_residual(const FieldJet& jet, const SourcePoint& src, const Units& u);

// The eight defining relations fields <- potentials, e.g.
// eps = (1/c) dphi/dt + div cA + kappa S.
FieldPoint fields_from_potentials(const PotentialJet& pjet, const Units& u);

// Field jet obtained by differentiating the defining relations once;
// needs the full second-order potential jet.
FieldJet field_jet_from_potentials(const PotentialJet2& pjet2, const Units& u);

/*
 * Residuals of the decoupled potential wave equations,
 * box X + kappa^2 X - zeta * (source of X), with box = (1/c^2) d2/dt2 - lap.
 * Ordering: phi, cA(3), Pi0, Pi(3), S, theta(3), Psi, vartheta(3).
 */
std::array<double, 16> potential_wave_residual(const PotentialJet2& pjet2, const SourcePoint& src,
                                               const Units& u);

// zeta (drho/dt + div j): the scalar-field source; nonzero only when the
// charge continuity equation fails.
inline double epsilon_source(double drho_dt, double div_j, const Units& u) {
  return u.zeta * (drho_dt + div_j);
}

// Longitudinal plane wave: eps = eps0 cos(wt - k.r), E parallel to k with
// |k| = w/c, no magnetic field, all other components zero.
FieldPoint plane_wave(double eps0, double omega, const Vec3& khat, double t, const Vec3& r,
                      const Units& u);

// Full first-derivative jet of the plane wave (for residual checks and
// solver initial data).
FieldJet plane_wave_jet(double eps0, double omega, const Vec3& khat, double t, const Vec3& r,
                        const Units& u);

// Frozen correspondence between the 3-D residual ordering above and the 4-D
// slot ordering of system_lhs_4d: residual3d[i] == sign[i] * lhs4d[slot[i]]
// for source-free jets. Established once, asserted on randomized jets.
struct SlotMap {
  int slot;
  double sign;
};
constexpr std::array<SlotMap, 16> k3dTo4dMap = {{
    {1, 1.0},  {2, 1.0},  {3, 1.0},  {4, 1.0},   // Eq. 8, 9
    {11, -1.0}, {12, -1.0}, {13, -1.0}, {14, -1.0},  // Eq. 10, 11
    {0, 1.0},  {5, 1.0},  {6, 1.0},  {7, 1.0},   // Eq. 12, 13
    {8, 1.0},  {9, 1.0},  {10, 1.0}, {15, 1.0},  // Eq. 14, 15
}};

// CSV column names for the flat 16-component orderings.
extern const char* const kFieldColumnNames[16];
extern const char* const kSourceColumnNames[16];

}  // namespace epsmax
