#pragma once

#include <span>

#include "gbwave/examples/examples_fwd.hpp"
#include "gbwave/quad/tensor.hpp"

namespace gbwave {

struct PointEval {
  cplx u{};    // value
  cplx ut{};   // d/dt
  cplx ur{};   // radial derivative
};

/// Exact spherical wave u = (f(t-r) - f(t+r))/r with f(r) = exp(-ikr - kr^2/2)/k.
/// The removable singularity at r = 0 uses the series limit below r = 1e-6
/// with the second-order correction.
PointEval spherical_exact(double r, double t, double k);

/// Reduced 1D superposition integral
///   u_GB(r,t) = i/(1+it) * int_{-1}^{1} exp(i k phi(s)) ds
/// with analytic d/dt and d/dr integrands; batch-evaluated over radii in
/// parallel. Panels on s auto-size with k and r_max unless given.
std::vector<PointEval> spherical_superposition(std::span<const double> radii,
                                               double t,
                                               const SphericalExample& ex,
                                               const QuadratureSpec& quad);

/// Convenience single-point wrapper.
PointEval spherical_superposition_at(double r, double t,
                                     const SphericalExample& ex,
                                     const QuadratureSpec& quad);

/// Absolute energy-norm error between superposition and exact solution at
/// time t (radial quadrature out to r = t + pad).
double spherical_energy_error(double t, const SphericalExample& ex,
                              const QuadratureSpec& field_quad,
                              const QuadratureSpec& radial_quad);

}  // namespace gbwave
