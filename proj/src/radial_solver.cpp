#include "epsmax/radial_solver.hpp"

#include <algorithm>
#include <cmath>

namespace epsmax {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

BoundaryHistory::Sample BoundaryHistory::query(double t) const {
  if (times_.empty() || t <= times_.front()) return {values_.empty() ? 0.0 : values_.front(), 0.0};
  const int last = static_cast<int>(times_.size()) - 1;
  if (t >= times_[last]) return {values_[last], 0.0};  // not reached for delayed queries
  const int bracket =
      static_cast<int>(std::upper_bound(times_.begin(), times_.end(), t) - times_.begin()) - 1;
  const int j0 = std::clamp(bracket - 1, 0, std::max(0, last - 3));
  const int npts = std::min(4, last - j0 + 1);
  double value = 0.0, rate = 0.0;
  for (int a = 0; a < npts; ++a) {
    const double ta = times_[j0 + a];
    double la = 1.0, dla = 0.0;
    for (int b = 0; b < npts; ++b) {
      if (b == a) continue;
      la *= (t - times_[j0 + b]) / (ta - times_[j0 + b]);
    }
    for (int b = 0; b < npts; ++b) {
      if (b == a) continue;
      double term = 1.0 / (ta - times_[j0 + b]);
      for (int c = 0; c < npts; ++c) {
        if (c == a || c == b) continue;
        term *= (t - times_[j0 + c]) / (ta - times_[j0 + c]);
      }
      dla += term;
    }
    value += values_[j0 + a] * la;
    rate += values_[j0 + a] * dla;
  }
  return {value, rate};
}

std::vector<double> deposition_profile(const RadialGrid& grid) {
  const double dr = grid.dr();
  std::vector<double> g(grid.total_nodes(), 0.0);
  // hat over the 4 cells centered on r0: internal nodes 1..5, trapezoid
  // edge weights 1/2
  const int lo = RadialGrid::kInnerExtra - 2;
  double norm = 0.0;
  for (int k = 0; k <= 4; ++k) {
    const int i = lo + k;
    const double w = (k == 0 || k == 4) ? 0.5 : 1.0;
    const double r = grid.radius(i);
    g[i] = w;
    norm += w * 4.0 * kPi * r * r * dr;
  }
  for (int k = 0; k <= 4; ++k) g[lo + k] /= norm;
  return g;
}

RadialState radial_initial_zero(const RadialGrid& grid, const Units& u) {
  grid.validate();
  RadialState st;
  st.eps.assign(grid.total_nodes(), 0.0);
  st.E.assign(grid.total_nodes(), 0.0);
  st.t = 0.0;
  st.phi_in = st.phi_out = 0.0;
  (void)u;
  st.history.reset(0.0, 0.0);
  return st;
}

RadialState radial_initial_static(const RadialGrid& grid, double q, const Units& u) {
  grid.validate();
  RadialState st;
  const int m = grid.total_nodes();
  st.eps.assign(m, 0.0);
  st.E.assign(m, 0.0);
  st.t = 0.0;

  // static field of the uniform-density hat on [a, b] = [r0 - 2dr, r0 + 2dr]
  const double dr = grid.dr();
  const double a = grid.r0 - 2.0 * dr, b = grid.r0 + 2.0 * dr;
  const double vol = (b * b * b - a * a * a);
  auto q_enc = [&](double r) {
    if (r <= a) return 0.0;
    if (r >= b) return q;
    return q * (r * r * r - a * a * a) / vol;
  };
  const double k = u.zeta * u.c / (4.0 * kPi);
  for (int i = 0; i < m; ++i) {
    const double r = grid.radius(i);
    st.E[i] = k * q_enc(r) / (r * r);
  }
  auto phi = [&](double r) {
    if (r >= b) return k * q / r;
    if (r <= a) return k * q * 1.5 * (b * b - a * a) / vol;
    return k * (q_enc(r) / r + q * 1.5 * (b * b - r * r) / vol);
  };
  st.phi_in = phi(grid.r_inner());
  st.phi_out = phi(grid.r_max);
  // pre-transient ingoing invariant is the static one
  (void)u;
  st.history.reset(0.0, grid.r_inner() * (st.eps[0] - st.E[0]) + st.phi_in);
  return st;
}

namespace {

struct Rhs {
  std::vector<double> deps, dE;
  double dphi_in = 0.0, dphi_out = 0.0;
};

void eval_rhs(const RadialState& st, const std::vector<double>& g_dep, const ChargeLaw& charge,
              const RadialGrid& grid, const Units& u, double t, Rhs& out, ThreadPool* pool) {
  const int m = grid.total_nodes();
  const double dr = grid.dr();
  const double c = u.c, zeta = u.zeta;
  const double q_now = charge(t);
  const double sigma = grid.dissipation;
  out.deps.resize(m);
  out.dE.resize(m);

  const auto& eps = st.eps;
  const auto& E = st.E;

  auto r2E = [&](int i) {
    const double r = grid.radius(i);
    return r * r * E[i];
  };

  auto interior = [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t s = lo; s < hi; ++s) {
      const int i = static_cast<int>(s) + 1;  // interior nodes 1..m-2
      if (i > m - 2) break;
      const double r = grid.radius(i);
      const double div_r2E = (r2E(i + 1) - r2E(i - 1)) / (2.0 * dr * r * r);
      out.deps[i] = c * (zeta * c * q_now * g_dep[i] - div_r2E);
      out.dE[i] = -c * (eps[i + 1] - eps[i - 1]) / (2.0 * dr);
      if (i >= 2 && i <= m - 3 && sigma > 0.0) {
        const double ko_eps =
            eps[i - 2] - 4.0 * eps[i - 1] + 6.0 * eps[i] - 4.0 * eps[i + 1] + eps[i + 2];
        const double ko_E = E[i - 2] - 4.0 * E[i - 1] + 6.0 * E[i] - 4.0 * E[i + 1] + E[i + 2];
        out.deps[i] -= sigma * c / (16.0 * dr) * ko_eps;
        out.dE[i] -= sigma * c / (16.0 * dr) * ko_E;
      }
    }
  };
  if (pool)
    pool->parallel_chunks(static_cast<std::size_t>(m - 2), interior);
  else
    interior(0, 0, static_cast<std::size_t>(m - 2));

  // one-sided second-order PDE rates at the edges
  auto pde_rates = [&](int i, int dir, double& deps_pde, double& dE_pde) {
    const double r = grid.radius(i);
    const double d_r2E =
        dir * (-3.0 * r2E(i) + 4.0 * r2E(i + dir) - r2E(i + 2 * dir)) / (2.0 * dr);
    const double d_eps =
        dir * (-3.0 * eps[i] + 4.0 * eps[i + dir] - eps[i + 2 * dir]) / (2.0 * dr);
    deps_pde = c * (zeta * c * q_now * g_dep[i] - d_r2E / (r * r));
    dE_pde = -c * d_eps;
  };

  // inner boundary: prescribe the ingoing invariant from delayed history
  {
    const double r_in = grid.r_inner();
    double deps_pde, dE_pde;
    pde_rates(0, +1, deps_pde, dE_pde);
    const auto h = st.history.query(t - 2.0 * r_in / c);
    const double dwin_dt = -h.rate;  // d/dt of prescribed w+ = -w-(t - T0)
    const double sum_rate = (dwin_dt + c * eps[0]) / r_in;   // d(eps+E)/dt
    const double diff_rate = deps_pde - dE_pde;              // d(eps-E)/dt from PDE
    out.deps[0] = 0.5 * (sum_rate + diff_rate);
    out.dE[0] = 0.5 * (sum_rate - diff_rate);
    out.dphi_in = c * eps[0];
  }

  // outer boundary: no incoming radiation, w- = r(eps - E) + phi stays 0
  {
    const int i = m - 1;
    const double r = grid.radius(i);
    double deps_pde, dE_pde;
    pde_rates(i, -1, deps_pde, dE_pde);
    const double sum_rate = deps_pde + dE_pde;
    const double diff_rate = -c * eps[i] / r;
    out.deps[i] = 0.5 * (sum_rate + diff_rate);
    out.dE[i] = 0.5 * (sum_rate - diff_rate);
    out.dphi_out = c * eps[i];
  }
}

}  // namespace

void step_radial(RadialState& state, const ChargeLaw& charge, const RadialGrid& grid,
                 const Units& u, double dt, ThreadPool* pool) {
  grid.validate();
  if (dt > grid.cfl * grid.dr() / u.c * (1.0 + 1e-12))
    throw CflViolation("dt exceeds cfl * dr / c");
  const int m = grid.total_nodes();
  if (static_cast<int>(state.eps.size()) != m || static_cast<int>(state.E.size()) != m)
    throw GridMismatch("radial state size does not match grid");

  const std::vector<double> g_dep = deposition_profile(grid);

  Rhs k1, k2, k3, k4;
  RadialState tmp = state;

  auto advance = [&](const RadialState& base, const Rhs& k, double h, RadialState& dst) {
    for (int i = 0; i < m; ++i) {
      dst.eps[i] = base.eps[i] + h * k.deps[i];
      dst.E[i] = base.E[i] + h * k.dE[i];
    }
    dst.phi_in = base.phi_in + h * k.dphi_in;
    dst.phi_out = base.phi_out + h * k.dphi_out;
  };

  const double t = state.t;
  eval_rhs(state, g_dep, charge, grid, u, t, k1, pool);
  advance(state, k1, 0.5 * dt, tmp);
  eval_rhs(tmp, g_dep, charge, grid, u, t + 0.5 * dt, k2, pool);
  advance(state, k2, 0.5 * dt, tmp);
  eval_rhs(tmp, g_dep, charge, grid, u, t + 0.5 * dt, k3, pool);
  advance(state, k3, dt, tmp);
  eval_rhs(tmp, g_dep, charge, grid, u, t + dt, k4, pool);

  for (int i = 0; i < m; ++i) {
    state.eps[i] += dt / 6.0 * (k1.deps[i] + 2.0 * (k2.deps[i] + k3.deps[i]) + k4.deps[i]);
    state.E[i] += dt / 6.0 * (k1.dE[i] + 2.0 * (k2.dE[i] + k3.dE[i]) + k4.dE[i]);
  }
  state.phi_in += dt / 6.0 * (k1.dphi_in + 2.0 * (k2.dphi_in + k3.dphi_in) + k4.dphi_in);
  state.phi_out += dt / 6.0 * (k1.dphi_out + 2.0 * (k2.dphi_out + k3.dphi_out) + k4.dphi_out);
  state.t = t + dt;

  if (!std::isfinite(state.eps[m / 2]) || !std::isfinite(state.E[m / 2]) ||
      !std::isfinite(state.eps[0]) || !std::isfinite(state.E[m - 1]))
    throw NonFiniteState("radial state blew up at t = " + std::to_string(state.t));

  state.history.append(state.t, grid.r_inner() * (state.eps[0] - state.E[0]) + state.phi_in);
}

}  // namespace epsmax
