#include "epsmax/shell.hpp"

#include <cmath>
#include <limits>

namespace epsmax {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_radius(double r, const ShellSpec& spec) {
  spec.validate();
  if (r < spec.r0)
    throw DomainError("shell closed forms are defined for r >= r0 only (r = " +
                      std::to_string(r) + ", r0 = " + std::to_string(spec.r0) + ")");
}

// 1 - (1 - e^{-x})/x, the bracket of the irreversible-energy term with
// x = 2 r0 / (c tau). Series branch keeps small-x evaluations accurate.
double irr_bracket(double x) {
  if (x < 1e-3) {
    // x/2 - x^2/6 + x^3/24 - x^4/120
    return x * (0.5 + x * (-1.0 / 6.0 + x * (1.0 / 24.0 - x / 120.0)));
  }
  return 1.0 + std::expm1(-x) / x;
}

// Growth-mode potential divided by the prefactor zeta c q0 / (8 pi r r0).
double phi_up_shape(double r, double t, double r0, double ctau, double c) {
  const double ct = c * t;
  if (ct <= r - r0) return 0.0;
  if (ct <= r + r0)
    return ct - ctau + r0 - r + ctau * std::exp((r - r0 - ct) / ctau);
  return 2.0 * r0 - ctau * (std::exp((r + r0 - ct) / ctau) - std::exp((r - r0 - ct) / ctau));
}

// Growth-mode eps divided by the same prefactor.
double eps_up_shape(double r, double t, double r0, double ctau, double c) {
  const double ct = c * t;
  if (ct <= r - r0) return 0.0;
  if (ct <= r + r0) return 1.0 - std::exp((r - r0 - ct) / ctau);
  return std::exp((r + r0 - ct) / ctau) - std::exp((r - r0 - ct) / ctau);
}

}  // namespace

double shell_charge(double t, const ShellSpec& spec) {
  spec.validate();
  if (spec.mode == ShellMode::growth)
    return t <= 0.0 ? 0.0 : spec.q0 * -std::expm1(-t / spec.tau);
  return t <= 0.0 ? spec.q0 : spec.q0 * std::exp(-t / spec.tau);
}

double shell_potential(double r, double t, const ShellSpec& spec, const Units& u) {
  check_radius(r, spec);
  const double pref = u.zeta * u.c * spec.q0 / (8.0 * kPi * r * spec.r0);
  const double ctau = u.c * spec.tau;
  if (spec.mode == ShellMode::growth) return pref * phi_up_shape(r, t, spec.r0, ctau, u.c);
  // phi_down = static Coulomb minus phi_up (superposition of the two laws)
  return pref * (2.0 * spec.r0 - phi_up_shape(r, t, spec.r0, ctau, u.c));
}

double shell_epsilon(double r, double t, const ShellSpec& spec, const Units& u) {
  check_radius(r, spec);
  const double pref = u.zeta * u.c * spec.q0 / (8.0 * kPi * r * spec.r0);
  const double shape = eps_up_shape(r, t, spec.r0, u.c * spec.tau, u.c);
  return spec.mode == ShellMode::growth ? pref * shape : -pref * shape;
}

double shell_radial_E(double r, double t, const ShellSpec& spec, const Units& u) {
  return shell_epsilon(r, t, spec, u) + shell_potential(r, t, spec, u) / r;
}

double shell_irreversible_energy(const ShellSpec& spec, const Units& u) {
  spec.validate();
  const double x = 2.0 * spec.r0 / (u.c * spec.tau);
  return u.zeta * u.c * spec.q0 * spec.q0 / (8.0 * kPi * spec.r0) * irr_bracket(x);
}

double shell_radiated_energy(double R, const ShellSpec& spec, const Units& u) {
  check_radius(R, spec);
  const double coul_through_R = u.zeta * u.c * spec.q0 * spec.q0 / (8.0 * kPi * R);
  const double sign = spec.mode == ShellMode::growth ? 1.0 : -1.0;
  return sign * coul_through_R + shell_irreversible_energy(spec, u);
}

double shell_rest_energy_change(const ShellSpec& spec, const Units& u) {
  spec.validate();
  const double w_coul_inf = u.zeta * u.c * spec.q0 * spec.q0 / (8.0 * kPi * spec.r0);
  if (spec.mode == ShellMode::growth) {
    // -Delta mc^2 = W_Coul(infinity) + irreversible part
    return w_coul_inf + shell_irreversible_energy(spec, u);
  }
  // +Delta mc^2 = (zeta c/4pi)(q0^2/2r0)(c tau/2r0)(1 - e^{-2r0/c tau})
  const double x = 2.0 * spec.r0 / (u.c * spec.tau);
  return w_coul_inf * (-std::expm1(-x)) / x;
}

double coulomb_energy(double q, double r_inner, double r_outer, const Units& u) {
  if (!(r_inner > 0.0)) throw DomainError("coulomb_energy: inner radius must be positive");
  if (r_outer < r_inner) throw DomainError("coulomb_energy: r_outer < r_inner");
  const double inv_out = std::isinf(r_outer) ? 0.0 : 1.0 / r_outer;
  return u.zeta * u.c * q * q / (8.0 * kPi) * (1.0 / r_inner - inv_out);
}

EnergyLedger balance_ledger(const ShellSpec& spec, double R, const Units& u) {
  check_radius(R, spec);
  EnergyLedger led{};
  led.mode = spec.mode;
  led.delta_rest_energy = shell_rest_energy_change(spec, u);
  led.w_coul = coulomb_energy(spec.q0, spec.r0, R, u);
  const double coul_through_R = u.zeta * u.c * spec.q0 * spec.q0 / (8.0 * kPi * R);
  if (spec.mode == ShellMode::growth) {
    led.w_rad = shell_irreversible_energy(spec, u) + coul_through_R;
    led.residual = led.delta_rest_energy - led.w_coul - led.w_rad;
  } else {
    led.w_rad = shell_irreversible_energy(spec, u) - coul_through_R;
    led.residual = led.w_coul - led.delta_rest_energy - led.w_rad;
  }
  return led;
}

RenormalizedMasses renormalization_masses(double m0, const ShellSpec& spec, const Units& u) {
  spec.validate();
  const double c2 = u.c * u.c;
  const double w_coul = coulomb_energy(spec.q0, spec.r0, std::numeric_limits<double>::infinity(), u);
  const double w_rad = shell_irreversible_energy(spec, u);
  return {m0 - w_coul / c2 - w_rad / c2, m0 - w_rad / c2};
}

}  // namespace epsmax
