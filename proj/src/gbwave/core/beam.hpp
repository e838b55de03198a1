#pragma once

#include "gbwave/common.hpp"
#include "gbwave/core/hamiltonian.hpp"

namespace gbwave {

/// Full first-order beam data on the central ray at one time.
template <int D>
struct BeamState {
  double t = 0;
  PhaseSpacePoint<D> ray;
  cplx action{};     // S(t); real for all shipped examples
  SymC<D> hessian;   // M(t), Im M positive definite
  cplx amplitude{};  // leading amplitude, evolved by the owning example
};

/// Quadratic phase data needed to evaluate
///   phi(x) = S + p.(x-gamma) + (1/2)(x-gamma).M(x-gamma).
template <int D>
struct BeamPhase {
  Vec<D> gamma{};
  Vec<D> p{};
  cplx S{};
  SymC<D> M;

  cplx phase_at(const Vec<D>& x) const {
    const Vec<D> y = sub(x, gamma);
    return S + cplx(dot(p, y)) + 0.5 * M.quad(y);
  }
};

/// amplitude * exp(i k phi(x)).
template <int D>
cplx evaluate_beam(const BeamPhase<D>& phase, cplx amplitude, const Vec<D>& x,
                   double k) {
  return amplitude * std::exp(iu * k * phase.phase_at(x));
}

}  // namespace gbwave
