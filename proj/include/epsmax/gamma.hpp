#pragma once

#include <array>
#include <complex>

#include "epsmax/errors.hpp"
#include "epsmax/fields.hpp"

namespace epsmax {

using Complex = std::complex<double>;
using Mat4c = std::array<std::array<Complex, 4>, 4>;

/*
 * The 16-unit hypercomplex number system built on Dirac matrices in the
 * standard Dirac representation (gamma0 = diag(1,1,-1,-1), spatial gammas
 * with Pauli blocks). Basis slots follow the order the units enter the
 * field ansatz:
 *
 *   0: I
 *   1..4:   g0, g1, g2, g3
 *   5..7:   g0g1, g0g2, g0g3
 *   8..10:  g2g3, g3g1, g1g2
 *   11..14: g1g2g3, g0g2g3, g0g3g1, g0g1g2
 *   15:     g0g1g2g3
 *
 * All pairwise products close onto a single basis element with factor in
 * {+-1, +-i}; the table of structure constants is built once from exact
 * integer-valued matrix entries.
 */
class GammaBasis {
 public:
  static const GammaBasis& instance();

  const Mat4c& matrix(int slot) const { return mats_[slot]; }
  const char* name(int slot) const { return names_[slot]; }

  // Structure constant: basis[i] * basis[j] = factor * basis[slot].
  struct Product {
    int slot;
    Complex factor;
  };
  const Product& product(int i, int j) const { return table_[i][j]; }

  static constexpr std::array<double, 4> metric = {1.0, -1.0, -1.0, -1.0};

 private:
  GammaBasis();
  std::array<Mat4c, 16> mats_;
  const char* names_[16];
  Product table_[16][16];
};

// Coefficients over the 16 basis slots. The i-factors of the field ansatz
// (on the V and U slots) are the composer's responsibility, not stored here.
struct Hypercomplex {
  std::array<Complex, 16> c{};

  Hypercomplex& operator+=(const Hypercomplex& o) {
    for (int i = 0; i < 16; ++i) c[i] += o.c[i];
    return *this;
  }
  Hypercomplex& operator*=(Complex s) {
    for (auto& v : c) v *= s;
    return *this;
  }

  // Matrix realization sum_i c_i Gamma_i.
  Mat4c matrix() const;
  // Inverse of matrix(): exact trace projection Tr(Gi^dag M) / Tr(Gi^dag Gi).
  static Hypercomplex from_matrix(const Mat4c& m);
  // Unit coefficient on one slot.
  static Hypercomplex unit(int slot) {
    Hypercomplex h;
    h.c[slot] = 1.0;
    return h;
  }
};

inline Hypercomplex operator+(Hypercomplex a, const Hypercomplex& b) { return a += b; }
inline Hypercomplex operator*(Complex s, Hypercomplex a) { return a *= s; }

// Product re-expanded in the basis via the structure-constant table.
// Exact: the basis spans all 4x4 complex matrices.
Hypercomplex multiply(const Hypercomplex& a, const Hypercomplex& b);

// Field ansatz: eps on I, i V_nu on g^nu, F_{0k} on g0 g^k, F_{23}, F_{31},
// F_{12} on the spatial bivectors, i U_nu on the triple products, beta on
// g0g1g2g3. V_nu and U_nu carry lowered indices (V_0 = V^0, V_k = -V^k);
// E = (F_01, F_02, F_03) and cB = (-F_23, -F_31, -F_12).
Hypercomplex compose_psi(const FieldPoint& f);

// Exact left inverse of compose_psi. Throws NonRealDecomposition if a slot
// carries more than 1e-12 relative weight in the wrong (real/imaginary) part.
FieldPoint decompose(const Hypercomplex& h);

/*
 * The 16 field equations in 4D covariant form, evaluated from a jet.
 * Output index = basis slot; the entry is the left side of the equation
 * that slot generates (Levi-Civita convention eps^{0123} = +1):
 *
 *   slot 0        : d_nu V^nu + kappa eps
 *   slots 1..4    : d_nu eps - d_mu F_nu^mu - kappa V_nu          (nu = 0..3)
 *   slots 5..10   : d_b V_a - d_a V_b + eta eta eps^{..} dU - kappa F_ab,
 *                   pairs (0,1) (0,2) (0,3) (2,3) (3,1) (1,2)
 *   slots 11..14  : d_nu beta + (eta/2) eps^{..} dF - kappa U_nu  (nu = 0..3)
 *   slot 15       : d_nu U^nu + kappa beta
 */
std::array<double, 16> system_lhs_4d(const FieldJet& jet, double kappa);

// Same 16 numbers obtained through the algebra: compose psi and its
// derivatives, apply (i g^nu d_nu - kappa) with multiply(), decompose the
// result and normalize each slot to the equation it carries.
std::array<double, 16> dirac_residual(const FieldJet& jet, double kappa);

}  // namespace epsmax
