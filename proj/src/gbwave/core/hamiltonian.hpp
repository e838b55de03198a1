#pragma once

#include "gbwave/common.hpp"

namespace gbwave {

/// Acoustic Hamiltonian H(x,p) = +-c|p| with constant sound speed c.
/// Both signs are needed to build two-mode superpositions; the second
/// derivative blocks are kept explicit so a variable c(x) can slot in later.
struct HamiltonianModel {
  enum class Mode { plus, minus };
  Mode mode = Mode::plus;
  double c = 1.0;

  double sign() const { return mode == Mode::plus ? 1.0 : -1.0; }
};

template <int D>
struct PhaseSpacePoint {
  Vec<D> x{};
  Vec<D> p{};
};

template <int D>
struct HamiltonianDerivs {
  double H;
  Vec<D> dH_dx;   // zero for constant c
  Vec<D> dH_dp;
  // second derivative blocks; dxx and dxp vanish for constant c
  std::array<std::array<double, D>, D> d2H_dxx{};
  std::array<std::array<double, D>, D> d2H_dxp{};
  std::array<std::array<double, D>, D> d2H_dpp{};
};

/// H = +-c|p| with exact first and second derivatives.
/// d2H/dpp = +-(c/|p|)(I - p p^T/|p|^2). Rejects |p| = 0.
template <int D>
HamiltonianDerivs<D> hamiltonian_eval(const HamiltonianModel& model,
                                      const PhaseSpacePoint<D>& X) {
  const double pn = norm(X.p);
  if (pn == 0.0)
    throw std::invalid_argument("hamiltonian_eval: |p| = 0 (H not differentiable)");
  const double s = model.sign();
  HamiltonianDerivs<D> d;
  d.H = s * model.c * pn;
  for (int i = 0; i < D; ++i) d.dH_dp[i] = s * model.c * X.p[i] / pn;
  d.dH_dx = Vec<D>{};
  const double f = s * model.c / pn;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      const double proj = (i == j ? 1.0 : 0.0) - X.p[i] * X.p[j] / (pn * pn);
      d.d2H_dpp[i][j] = f * proj;
    }
  return d;
}

}  // namespace gbwave
