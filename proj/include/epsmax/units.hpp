#pragma once

namespace epsmax {

/*
 * Unit system carried through every formula. Internally the code runs in
 * natural units (c = zeta = 1) so that equation coefficients stay +-1;
 * SI values are only ever used when converting input/output.
 *
 *   c     - speed of light
 *   zeta  - vacuum impedance sqrt(mu0/eps0); replaces eps0, mu0 pairs
 *   kappa - Compton wave number m c / hbar (inverse length), 0 for the
 *           massless subsystem
 */
struct Units {
  double c = 1.0;
  double zeta = 1.0;
  double kappa = 0.0;

  static Units natural(double kappa = 0.0) { return {1.0, 1.0, kappa}; }
  static Units si(double kappa = 0.0) { return {299792458.0, 376.730313668, kappa}; }
};

}  // namespace epsmax
