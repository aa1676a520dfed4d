#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace epsmax {

/*
 * Adaptive Gauss-Kronrod 7/15 quadrature. Intervals are bisected until the
 * embedded error estimate meets rel_tol (or abs_tol for near-zero
 * integrals). Integrands with known kinks should be split there first via
 * integrate_segments().
 */
namespace quad {

// QUADPACK dqk15 nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

template <typename F>
struct GkResult {
  double value;
  double error;
};

template <typename F>
GkResult<F> gk15(const F& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= h;
  gauss *= h;
  return {kronrod, std::abs(kronrod - gauss)};
}

template <typename F>
double integrate_impl(const F& f, double a, double b, double rel_tol, double abs_tol, int depth) {
  const auto r = gk15(f, a, b);
  if (r.error <= rel_tol * std::abs(r.value) + abs_tol || depth >= 48) return r.value;
  const double mid = 0.5 * (a + b);
  return integrate_impl(f, a, mid, rel_tol, 0.5 * abs_tol, depth + 1) +
         integrate_impl(f, mid, b, rel_tol, 0.5 * abs_tol, depth + 1);
}

}  // namespace quad

template <typename F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10, double abs_tol = 0.0) {
  if (a == b) return 0.0;
  return quad::integrate_impl(f, a, b, rel_tol, abs_tol, 0);
}

// Integration over [a, b] split at the interior breakpoints (kink times of
// piecewise-smooth integrands).
template <typename F>
double integrate_segments(const F& f, double a, double b, std::vector<double> breaks,
                          double rel_tol = 1e-10, double abs_tol = 0.0) {
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::clamp(breaks[i], a, b);
    const double hi = std::clamp(breaks[i + 1], a, b);
    if (hi > lo) total += integrate(f, lo, hi, rel_tol, abs_tol);
  }
  return total;
}

}  // namespace epsmax
