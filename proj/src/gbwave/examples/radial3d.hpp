#pragma once

#include <span>

#include "gbwave/examples/examples_fwd.hpp"
#include "gbwave/examples/spherical.hpp"  // PointEval
#include "gbwave/quad/tensor.hpp"

namespace gbwave {

/// Hessian coefficient of the radial example's beam families,
/// b(tau; s) = (1 - i tau (1 + i s)) / (s + i s tau + tau); b(0;s) = 1/s.
cplx radial3d_b(double tau, double s);

/// Exact solution u(r,t) = (f(t+r) - f(t-r))/r, f(s) = s a(s) e^{iks}/2
/// extended oddly; series limit with second-order correction below r = 1e-6.
PointEval radial3d_exact(double r, double t, const Radial3dExample& ex);

/// Reduced (s,v) superposition integral evaluated at radii (minus-mode
/// reduction plus its counterpart with t -> -t), with analytic d/dt and d/dr
/// integrands. At r = 0 the v-integrand is constant and the formula is used
/// directly. Reports a pole of the amplitude factor if |1 - t(1/s + i)|
/// drops below 1e-8 on the domain.
std::vector<PointEval> radial3d_superposition(std::span<const double> radii,
                                              double t,
                                              const Radial3dExample& ex,
                                              const QuadratureSpec& quad);

PointEval radial3d_superposition_at(double r, double t,
                                    const Radial3dExample& ex,
                                    const QuadratureSpec& quad);

/// Measure for radial energy errors: ball3d integrates with 4 pi r^2 dr,
/// radial_profile with plain dr (the convention behind the shipped energy
/// tables, whose values are dominated by the focus spike).
enum class RadialMeasure { ball3d, radial_profile };

/// Numerator / denominator of the relative energy error out to r1 + t:
/// (||u - u_GB||_E, ||u_GB||_E) in the chosen measure.
std::pair<double, double> radial3d_energy_pair(double t,
                                               const Radial3dExample& ex,
                                               const QuadratureSpec& field_quad,
                                               const QuadratureSpec& radial_quad,
                                               RadialMeasure measure);

}  // namespace gbwave
