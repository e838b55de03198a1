#pragma once

#include <functional>

#include "gbwave/core/beam.hpp"

namespace gbwave {

template <int D>
struct RayPoint {
  double t;
  PhaseSpacePoint<D> X;
  cplx S;
};

/// Classical fixed-step RK4 for the ray system
///   x' = dH/dp,  p' = -dH/dx,  S' = p.dH/dp - H.
/// For constant c the trajectory is the straight line x0 +- t c p0/|p0| and
/// S stays constant; that is what the tests pin down. Steps reject |p| below
/// 1e-12, which cannot trigger for constant c but guards variable-c use.
template <int D>
std::vector<RayPoint<D>> propagate_ray(const HamiltonianModel& model,
                                       const PhaseSpacePoint<D>& X0,
                                       double t_final, double dt);

/// RK4 for the matrix Riccati equation
///   M' = -d2H/dxx - M d2H/dxp - d2H/dpx M - M d2H/dpp M
/// along a precomputed ray. Each stage is symmetrized to kill roundoff
/// asymmetry. Fails if min eig Im M drops below 1e-10 (theory forbids it for
/// first-order beams).
template <int D>
std::vector<SymC<D>> propagate_hessian(const HamiltonianModel& model,
                                       const std::vector<RayPoint<D>>& ray,
                                       const SymC<D>& M0);

/// Min and max over the time grid of |X(t;a) - X(t;b)| / |a - b|
/// (phase-space distance ratio; the non-squeezing diagnostic).
template <int D>
std::pair<double, double> non_squeezing_ratio(const HamiltonianModel& model,
                                              const PhaseSpacePoint<D>& X0a,
                                              const PhaseSpacePoint<D>& X0b,
                                              double t_final, double dt);

}  // namespace gbwave
