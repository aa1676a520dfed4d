#include "epsmax/gamma.hpp"

#include <cmath>
#include <cstdlib>

namespace epsmax {

namespace {

Mat4c zero4() {
  Mat4c m{};
  for (auto& row : m) row.fill(Complex(0.0, 0.0));
  return m;
}

Mat4c matmul(const Mat4c& a, const Mat4c& b) {
  Mat4c r = zero4();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

}  // namespace

const GammaBasis& GammaBasis::instance() {
  static const GammaBasis basis;
  return basis;
}

GammaBasis::GammaBasis() {
  const Complex i(0.0, 1.0);

  Mat4c g0 = zero4(), g1 = zero4(), g2 = zero4(), g3 = zero4(), id = zero4();
  for (int k = 0; k < 4; ++k) id[k][k] = 1.0;
  g0[0][0] = 1.0; g0[1][1] = 1.0; g0[2][2] = -1.0; g0[3][3] = -1.0;
  // g^k = [[0, sigma_k], [-sigma_k, 0]]
  g1[0][3] = 1.0;  g1[1][2] = 1.0;  g1[2][1] = -1.0; g1[3][0] = -1.0;
  g2[0][3] = -i;   g2[1][2] = i;    g2[2][1] = -i;   g2[3][0] = i;
  g3[0][2] = 1.0;  g3[1][3] = -1.0; g3[2][0] = -1.0; g3[3][1] = 1.0;

  mats_[0] = id;
  mats_[1] = g0; mats_[2] = g1; mats_[3] = g2; mats_[4] = g3;
  mats_[5] = matmul(g0, g1); mats_[6] = matmul(g0, g2); mats_[7] = matmul(g0, g3);
  mats_[8] = matmul(g2, g3); mats_[9] = matmul(g3, g1); mats_[10] = matmul(g1, g2);
  mats_[11] = matmul(g1, mats_[8]);                 // g1g2g3
  mats_[12] = matmul(g0, mats_[8]);                 // g0g2g3
  mats_[13] = matmul(g0, matmul(g3, g1));           // g0g3g1
  mats_[14] = matmul(g0, g1); mats_[14] = matmul(mats_[14], g2);  // g0g1g2
  mats_[15] = matmul(g0, mats_[11]);                // g0g1g2g3

  static const char* kNames[16] = {
      "I",    "g0",   "g1",   "g2",   "g3",     "g0g1",   "g0g2",   "g0g3",
      "g2g3", "g3g1", "g1g2", "g1g2g3", "g0g2g3", "g0g3g1", "g0g1g2", "g0g1g2g3"};
  for (int k = 0; k < 16; ++k) names_[k] = kNames[k];

  // Build the structure-constant table by multiplying matrices and matching
  // the product to (factor, slot). Entries are exact integers times {1, i},
  // so the comparison is exact in double precision.
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      const Mat4c p = matmul(mats_[a], mats_[b]);
      int hit = -1;
      Complex factor;
      for (int s = 0; s < 16 && hit < 0; ++s) {
        // first nonzero entry of basis s determines the candidate factor
        for (int r = 0; r < 4 && hit < 0; ++r) {
          for (int c = 0; c < 4; ++c) {
            if (mats_[s][r][c] != Complex(0.0, 0.0)) {
              const Complex f = p[r][c] / mats_[s][r][c];
              if (f == Complex(0.0, 0.0)) break;
              bool match = true;
              for (int rr = 0; rr < 4 && match; ++rr)
                for (int cc = 0; cc < 4; ++cc)
                  if (p[rr][cc] != f * mats_[s][rr][cc]) { match = false; break; }
              if (match) { hit = s; factor = f; }
              break;
            }
          }
        }
      }
      if (hit < 0) std::abort();  // basis closure is a mathematical fact
      table_[a][b] = {hit, factor};
    }
  }
}

Mat4c Hypercomplex::matrix() const {
  const GammaBasis& basis = GammaBasis::instance();
  Mat4c m = zero4();
  for (int s = 0; s < 16; ++s) {
    if (c[s] == Complex(0.0, 0.0)) continue;
    const Mat4c& g = basis.matrix(s);
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k) m[r][k] += c[s] * g[r][k];
  }
  return m;
}

Hypercomplex Hypercomplex::from_matrix(const Mat4c& m) {
  const GammaBasis& basis = GammaBasis::instance();
  Hypercomplex h;
  for (int s = 0; s < 16; ++s) {
    const Mat4c& g = basis.matrix(s);
    Complex num = 0.0, den = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k) {
        num += std::conj(g[k][r]) * m[k][r];
        den += std::conj(g[k][r]) * g[k][r];
      }
    h.c[s] = num / den;
  }
  return h;
}

Hypercomplex multiply(const Hypercomplex& a, const Hypercomplex& b) {
  const GammaBasis& basis = GammaBasis::instance();
  Hypercomplex r;
  for (int i = 0; i < 16; ++i) {
    if (a.c[i] == Complex(0.0, 0.0)) continue;
    for (int j = 0; j < 16; ++j) {
      if (b.c[j] == Complex(0.0, 0.0)) continue;
      const auto& p = basis.product(i, j);
      r.c[p.slot] += a.c[i] * b.c[j] * p.factor;
    }
  }
  return r;
}

Hypercomplex compose_psi(const FieldPoint& f) {
  const Complex i(0.0, 1.0);
  Hypercomplex h;
  h.c[0] = f.eps;
  // i V_nu with V_0 = V^0, V_k = -V^k
  h.c[1] = i * f.V0;
  h.c[2] = -i * f.V.x;
  h.c[3] = -i * f.V.y;
  h.c[4] = -i * f.V.z;
  // F_{0k} = E_k
  h.c[5] = f.E.x;
  h.c[6] = f.E.y;
  h.c[7] = f.E.z;
  // F_{23} = -cB_x, F_{31} = -cB_y, F_{12} = -cB_z
  h.c[8] = -f.cB.x;
  h.c[9] = -f.cB.y;
  h.c[10] = -f.cB.z;
  // i U_nu, lowered
  h.c[11] = i * f.U0;
  h.c[12] = -i * f.U.x;
  h.c[13] = -i * f.U.y;
  h.c[14] = -i * f.U.z;
  h.c[15] = f.beta;
  return h;
}

FieldPoint decompose(const Hypercomplex& h) {
  // slots 1..4 and 11..14 hold i*(real field); the rest hold real fields
  static constexpr bool kImagSlot[16] = {false, true, true, true, true,
                                         false, false, false, false, false, false,
                                         true, true, true, true, false};
  std::array<double, 16> v{};
  for (int s = 0; s < 16; ++s) {
    const double want = kImagSlot[s] ? h.c[s].imag() : h.c[s].real();
    const double wrong = kImagSlot[s] ? h.c[s].real() : h.c[s].imag();
    if (std::abs(wrong) > 1e-12 * std::abs(h.c[s]))
      throw NonRealDecomposition("hypercomplex value is not in the real-field image (slot " +
                                 std::to_string(s) + ")");
    v[s] = want;
  }
  FieldPoint f;
  f.eps = v[0];
  f.V0 = v[1];
  f.V = {-v[2], -v[3], -v[4]};
  f.E = {v[5], v[6], v[7]};
  f.cB = {-v[8], -v[9], -v[10]};
  f.U0 = v[11];
  f.U = {-v[12], -v[13], -v[14]};
  f.beta = v[15];
  return f;
}

namespace {

// Levi-Civita symbol with eps^{0123} = +1.
int lc4(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  if (((1 << a) | (1 << b) | (1 << c) | (1 << d)) != 0xF) return 0;
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    int j = i;
    while (p[j] != i) ++j;
    if (j != i) {
      std::swap(p[i], p[j]);
      sign = -sign;
    }
  }
  return sign;
}

struct Tensors {
  double F[4][4];        // F_{ab}
  double dF[4][4][4];    // d_nu F_{ab}
  double Vlo[4], Ulo[4];
  double dVlo[4][4], dUlo[4][4];  // d_nu V_a
  double deps[4], dbeta[4];
  double divVup, divUup;
};

Tensors tensors_from_jet(const FieldJet& jet) {
  Tensors t{};
  auto fill_F = [](const FieldPoint& f, double F[4][4]) {
    F[0][1] = f.E.x; F[0][2] = f.E.y; F[0][3] = f.E.z;
    F[2][3] = -f.cB.x; F[1][3] = f.cB.y; F[1][2] = -f.cB.z;
    F[1][0] = -F[0][1]; F[2][0] = -F[0][2]; F[3][0] = -F[0][3];
    F[3][2] = -F[2][3]; F[3][1] = -F[1][3]; F[2][1] = -F[1][2];
    F[0][0] = F[1][1] = F[2][2] = F[3][3] = 0.0;
  };
  fill_F(jet.value, t.F);
  for (int nu = 0; nu < 4; ++nu) {
    const FieldPoint& d = jet.d(nu);
    double dFn[4][4];
    fill_F(d, dFn);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t.dF[nu][a][b] = dFn[a][b];
    t.dVlo[nu][0] = d.V0;
    t.dUlo[nu][0] = d.U0;
    for (int k = 0; k < 3; ++k) {
      t.dVlo[nu][k + 1] = -d.V[k];
      t.dUlo[nu][k + 1] = -d.U[k];
    }
    t.deps[nu] = d.eps;
    t.dbeta[nu] = d.beta;
  }
  t.Vlo[0] = jet.value.V0; t.Ulo[0] = jet.value.U0;
  for (int k = 0; k < 3; ++k) {
    t.Vlo[k + 1] = -jet.value.V[k];
    t.Ulo[k + 1] = -jet.value.U[k];
  }
  // d_nu V^nu with upper components
  t.divVup = jet.dt.V0 + jet.grad[0].V.x + jet.grad[1].V.y + jet.grad[2].V.z;
  t.divUup = jet.dt.U0 + jet.grad[0].U.x + jet.grad[1].U.y + jet.grad[2].U.z;
  return t;
}

constexpr std::pair<int, int> kBivectorPairs[6] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};

}  // namespace

std::array<double, 16> system_lhs_4d(const FieldJet& jet, double kappa) {
  const Tensors t = tensors_from_jet(jet);
  const auto& eta = GammaBasis::metric;
  std::array<double, 16> out{};

  out[0] = t.divVup + kappa * jet.value.eps;
  out[15] = t.divUup + kappa * jet.value.beta;

  // d_nu eps - d_mu F_nu^mu - kappa V_nu, with F_nu^mu = F_{nu a} eta^{a mu}
  for (int nu = 0; nu < 4; ++nu) {
    double divF = 0.0;
    for (int mu = 0; mu < 4; ++mu) divF += t.dF[mu][nu][mu] * eta[mu];
    out[1 + nu] = t.deps[nu] - divF - kappa * t.Vlo[nu];
  }

  // d_nu beta + (eta_{nu a}/2) eps^{a b c d} d_b F_{cd} - kappa U_nu
  for (int nu = 0; nu < 4; ++nu) {
    double dual = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const int lc = lc4(nu, b, c, d);
          if (lc) dual += 0.5 * eta[nu] * lc * t.dF[b][c][d];
        }
    out[11 + nu] = t.dbeta[nu] + dual - kappa * t.Ulo[nu];
  }

  // d_b V_a - d_a V_b + eta_{a n} eta_{b m} eps^{n m c d} d_d U_c - kappa F_{ab}
  for (int p = 0; p < 6; ++p) {
    const auto [a, b] = kBivectorPairs[p];
    double dual = 0.0;
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        const int lc = lc4(a, b, c, d);
        if (lc) dual += eta[a] * eta[b] * lc * t.dUlo[d][c];
      }
    out[5 + p] = t.dVlo[b][a] - t.dVlo[a][b] + dual - kappa * t.F[a][b];
  }
  return out;
}

std::array<double, 16> dirac_residual(const FieldJet& jet, double kappa) {
  const Complex i(0.0, 1.0);
  Hypercomplex r = compose_psi(jet.value);
  r *= Complex(-kappa);
  for (int nu = 0; nu < 4; ++nu) {
    Hypercomplex dpsi = compose_psi(jet.d(nu));
    r += i * multiply(Hypercomplex::unit(1 + nu), dpsi);
  }
  // Normalize raw slot coefficients to the equation left sides:
  // I slot carries -(Eq on slot 0), vector/trivector slots carry i*(Eq),
  // bivector slots carry +(Eq), the g0g1g2g3 slot carries -(Eq).
  std::array<double, 16> out{};
  out[0] = -r.c[0].real();
  for (int nu = 0; nu < 4; ++nu) out[1 + nu] = r.c[1 + nu].imag();
  for (int p = 0; p < 6; ++p) out[5 + p] = r.c[5 + p].real();
  for (int nu = 0; nu < 4; ++nu) out[11 + nu] = r.c[11 + nu].imag();
  out[15] = -r.c[15].real();
  return out;
}

}  // namespace epsmax
