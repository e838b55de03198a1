#include "gbwave/core/propagate.hpp"

namespace gbwave {

namespace {

template <int D>
struct RayRhs {
  Vec<D> dx;
  Vec<D> dp;
  cplx dS;
};

template <int D>
RayRhs<D> ray_rhs(const HamiltonianModel& model, const PhaseSpacePoint<D>& X) {
  const auto d = hamiltonian_eval(model, X);
  RayRhs<D> r;
  r.dx = d.dH_dp;
  for (int i = 0; i < D; ++i) r.dp[i] = -d.dH_dx[i];
  r.dS = dot(X.p, d.dH_dp) - d.H;
  return r;
}

template <int D>
using MatD = std::array<std::array<double, D>, D>;

// Riccati right-hand side, symmetrized.
template <int D>
SymC<D> hessian_rhs(const HamiltonianDerivs<D>& h, const SymC<D>& M) {
  // full (i,j) entry of -d2xx - M d2xp - d2px M - M d2pp M
  std::array<std::array<cplx, D>, D> full{};
  // Mpp = M * d2pp
  std::array<std::array<cplx, D>, D> Mpp{};
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      cplx s = 0;
      for (int l = 0; l < D; ++l) s += M(i, l) * h.d2H_dpp[l][j];
      Mpp[i][j] = s;
    }
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      cplx s = -h.d2H_dxx[i][j];
      for (int l = 0; l < D; ++l) {
        s -= M(i, l) * h.d2H_dxp[l][j];  // M d2xp
        s -= h.d2H_dxp[i][l] * M(l, j);  // d2px M  (d2px = d2xp^T)
        s -= Mpp[i][l] * M(l, j);        // M d2pp M
      }
      full[i][j] = s;
    }
  SymC<D> r;
  for (int i = 0; i < D; ++i)
    for (int j = i; j < D; ++j) r.at(i, j) = 0.5 * (full[i][j] + full[j][i]);
  return r;
}

}  // namespace

template <int D>
std::vector<RayPoint<D>> propagate_ray(const HamiltonianModel& model,
                                       const PhaseSpacePoint<D>& X0,
                                       double t_final, double dt) {
  if (dt <= 0) throw std::invalid_argument("propagate_ray: dt must be positive");
  if (norm(X0.p) == 0.0)
    throw std::invalid_argument("propagate_ray: |p0| = 0");
  const int nsteps = static_cast<int>(std::ceil(t_final / dt - 1e-12));
  std::vector<RayPoint<D>> out;
  out.reserve(nsteps + 1);
  PhaseSpacePoint<D> X = X0;
  cplx S = 0;
  double t = 0;
  out.push_back({t, X, S});
  for (int n = 0; n < nsteps; ++n) {
    const double h = std::min(dt, t_final - t);
    auto k1 = ray_rhs(model, X);
    PhaseSpacePoint<D> X2{add(X.x, scale<D>(h / 2, k1.dx)),
                          add(X.p, scale<D>(h / 2, k1.dp))};
    auto k2 = ray_rhs(model, X2);
    PhaseSpacePoint<D> X3{add(X.x, scale<D>(h / 2, k2.dx)),
                          add(X.p, scale<D>(h / 2, k2.dp))};
    auto k3 = ray_rhs(model, X3);
    PhaseSpacePoint<D> X4{add(X.x, scale<D>(h, k3.dx)),
                          add(X.p, scale<D>(h, k3.dp))};
    auto k4 = ray_rhs(model, X4);
    for (int i = 0; i < D; ++i) {
      X.x[i] += h / 6 * (k1.dx[i] + 2 * k2.dx[i] + 2 * k3.dx[i] + k4.dx[i]);
      X.p[i] += h / 6 * (k1.dp[i] + 2 * k2.dp[i] + 2 * k3.dp[i] + k4.dp[i]);
    }
    S += h / 6.0 * (k1.dS + 2.0 * k2.dS + 2.0 * k3.dS + k4.dS);
    t += h;
    if (norm(X.p) < 1e-12)
      throw std::runtime_error("propagate_ray: |p| fell below 1e-12");
    out.push_back({t, X, S});
  }
  return out;
}

template <int D>
std::vector<SymC<D>> propagate_hessian(const HamiltonianModel& model,
                                       const std::vector<RayPoint<D>>& ray,
                                       const SymC<D>& M0) {
  if (min_imag_eig(M0) <= 0)
    throw std::invalid_argument("propagate_hessian: Im M0 not positive definite");
  std::vector<SymC<D>> out;
  out.reserve(ray.size());
  SymC<D> M = M0;
  out.push_back(M);
  for (std::size_t n = 0; n + 1 < ray.size(); ++n) {
    const double h = ray[n + 1].t - ray[n].t;
    // stage Hamiltonians at t, t+h/2, t+h: for constant c the second
    // derivatives depend only on p, which is constant along the ray, so the
    // endpoint evaluations suffice for the midpoint stages.
    const auto h0 = hamiltonian_eval(model, ray[n].X);
    PhaseSpacePoint<D> Xm{scale(0.5, add(ray[n].X.x, ray[n + 1].X.x)),
                          scale(0.5, add(ray[n].X.p, ray[n + 1].X.p))};
    const auto hm = hamiltonian_eval(model, Xm);
    const auto h1 = hamiltonian_eval(model, ray[n + 1].X);

    const SymC<D> k1 = hessian_rhs(h0, M);
    const SymC<D> k2 = hessian_rhs(hm, M + (0.5 * h) * k1);
    const SymC<D> k3 = hessian_rhs(hm, M + (0.5 * h) * k2);
    const SymC<D> k4 = hessian_rhs(h1, M + cplx(h) * k3);
    M += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (min_imag_eig(M) < 1e-10)
      throw std::runtime_error(
          "propagate_hessian: min eig Im M dropped below 1e-10");
    out.push_back(M);
  }
  return out;
}

template <int D>
std::pair<double, double> non_squeezing_ratio(const HamiltonianModel& model,
                                              const PhaseSpacePoint<D>& X0a,
                                              const PhaseSpacePoint<D>& X0b,
                                              double t_final, double dt) {
  const double d0 =
      std::sqrt(norm2(sub(X0a.x, X0b.x)) + norm2(sub(X0a.p, X0b.p)));
  if (d0 == 0.0)
    throw std::invalid_argument("non_squeezing_ratio: coincident inputs");
  const auto ta = propagate_ray(model, X0a, t_final, dt);
  const auto tb = propagate_ray(model, X0b, t_final, dt);
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const double d = std::sqrt(norm2(sub(ta[i].X.x, tb[i].X.x)) +
                               norm2(sub(ta[i].X.p, tb[i].X.p)));
    const double r = d / d0;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

#define GBWAVE_INSTANTIATE(D)                                                  \
  template std::vector<RayPoint<D>> propagate_ray<D>(                          \
      const HamiltonianModel&, const PhaseSpacePoint<D>&, double, double);     \
  template std::vector<SymC<D>> propagate_hessian<D>(                          \
      const HamiltonianModel&, const std::vector<RayPoint<D>>&,                \
      const SymC<D>&);                                                         \
  template std::pair<double, double> non_squeezing_ratio<D>(                   \
      const HamiltonianModel&, const PhaseSpacePoint<D>&,                      \
      const PhaseSpacePoint<D>&, double, double);

GBWAVE_INSTANTIATE(1)
GBWAVE_INSTANTIATE(2)
GBWAVE_INSTANTIATE(3)
#undef GBWAVE_INSTANTIATE

}  // namespace gbwave
