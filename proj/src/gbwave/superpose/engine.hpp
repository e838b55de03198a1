#pragma once

#include "gbwave/quad/tensor.hpp"
#include "gbwave/superpose/manifold.hpp"

namespace gbwave {

struct Want {
  bool value = true;
  bool dt = false;
  bool grad = false;
};

/// serial_reference sums every node for every target with no spatial culling,
/// single-threaded; it is the oracle the parallel kernel is tested against
/// (and the baseline the benchmark compares).
enum class ExecPolicy { serial_reference, parallel };

template <int D>
struct SuperpositionResult {
  std::vector<cplx> values;
  std::vector<cplx> dt_values;
  std::vector<CVec<D>> grad_values;
  /// max over targets of the panel-doubling Richardson difference, with the
  /// dt/grad lanes scaled by 1/max(1,k); NaN in trust mode.
  double quad_error_estimate = std::numeric_limits<double>::quiet_NaN();
  int refinements_used = 0;
};

/// u_GB(x,t) = k^(m/2) sum_nodes w * weight(z) * A(t;z) exp(i k phi(x,t;z))
/// over a composite tensor Gauss-Legendre grid on the manifold's box, with
/// analytic d/dt and grad integrands on request. Panels double on every axis
/// until the Richardson difference is below quad.abs_tol.
///
/// If quad.panels_per_axis is empty the manifold's panel_hint sizes level 0.
template <int D>
SuperpositionResult<D> integrate_superposition(
    const InitialManifold<D>& manifold, double t, double k,
    std::type_identity_t<std::span<const Vec<D>>> targets,
    const QuadratureSpec& quad, Want want,
    ExecPolicy policy = ExecPolicy::parallel);

}  // namespace gbwave
