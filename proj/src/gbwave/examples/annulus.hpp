#pragma once

#include "gbwave/superpose/engine.hpp"

namespace gbwave {

/// Hessian coefficient of the tangent-ray family: b(0,s) = i + 1/(s-1),
/// b(t,s) = b(0,s)/(1 + t b(0,s)) = (1 + i(s-1))/(t + s - 1 + i t (s-1)).
cplx annulus_b(double t, double s);

/// Beam of the tangent-ray family at (theta, s), evolved to time t:
/// ray gamma = sqrt(2) e_{theta+pi/4} + (t+s) tau(theta), momentum
/// tau = (sin theta, -cos theta), Hessian i P + b(t,s) P_perp, amplitude
/// A0(s) (1 + t b(0,s))^(-1/2) on the principal branch (continuous from 1 at
/// t = 0; the factor stays in the closed upper half plane for t >= 0).
/// Rejects s = 1, where b(0,s) is singular (tangency point).
std::pair<BeamPhase<2>, cplx> annulus_beam(double theta, double s, double t,
                                           const AnnulusExample& ex);

/// Row-major target list of the uniform K x K grid on [-L/2, L/2)^2
/// (x1 fastest), matching GridField2D storage.
std::vector<Vec<2>> grid_targets(int K, double L);

/// Superposition u_GB(x,t) = (k/2pi) int_0^1 ds int_0^2pi A e^{ik phi} (1-s)
/// dtheta over the requested targets, with analytic d/dt and gradient
/// integrands. The opposite-direction family is added only when
/// ex.include_plus_branch is set.
SuperpositionResult<2> annulus_superposition(std::span<const Vec<2>> targets,
                                             double t,
                                             const AnnulusExample& ex,
                                             const QuadratureSpec& quad,
                                             Want want,
                                             ExecPolicy policy = ExecPolicy::parallel);

}  // namespace gbwave
