#pragma once

#include <functional>
#include <span>

#include "gbwave/core/beam.hpp"
#include "gbwave/examples/examples_fwd.hpp"

namespace gbwave {

/// Initial beam data at one chart point z.
template <int D>
struct ChartPoint {
  Vec<D> x0{};
  Vec<D> p0{};
  cplx S0{};
  SymC<D> M0;
  cplx A0{};
};

/// Beam data at evaluation time t together with its time derivatives; the
/// engine assembles the phase, d(phase)/dt and grad(phase) from these.
template <int D>
struct BeamAt {
  Vec<D> x{}, p{}, dx{}, dp{};
  cplx S{}, dS{};
  SymC<D> M, dM;
  cplx A{}, dA{};
};

struct AxisDef {
  double lo = 0, hi = 1;
  bool periodic = false;
};

/// Parameterization z in Sigma (an m-dimensional box) of a set of beams in
/// d-dimensional space: chart gives the initial data, weight the Jacobian
/// factor of the parameterization, and beam_at (when the example has closed
/// forms, which all shipped examples do) the beam evolved to time t.
/// Without beam_at only t = 0 evaluation is possible, and only for values
/// and gradients: amplitude transport is example-specific.
template <int D>
struct InitialManifold {
  int dim_m = 0;             // manifold dimension; k^{m/2} prefactor exponent
  std::vector<AxisDef> axes; // one per chart parameter, axes.size() == dim_m
  std::function<ChartPoint<D>(std::span<const double>)> chart;
  std::function<double(std::span<const double>)> weight;
  std::function<BeamAt<D>(std::span<const double>, double)> beam_at;
  /// Initial panels per axis for a target set of extent xmax (auto sizing).
  std::function<std::vector<int>(double k, double xmax, int order)> panel_hint;
  /// Acoustic manifolds must avoid {p = 0}; checked on the quadrature nodes.
  /// Static-data charts whose momentum legitimately passes through zero
  /// (the quadratic-phase families below) opt out.
  bool check_nonzero_momentum = true;
};

/// Charts for the shipped examples. The engine always applies the k^(m/2)
/// prefactor of the generic superposition; examples whose own conventions
/// differ rescale in their wrapper (documented there).
InitialManifold<3> manifold_spherical(const SphericalExample& ex);
InitialManifold<3> manifold_radial3d(const Radial3dExample& ex);
InitialManifold<2> manifold_annulus(const AnnulusExample& ex);

/// Static (t = 0) quadratic-phase manifolds used as quadrature oracles.
InitialManifold<1> manifold_e1_box_1d(double z_max = 8.0);
/// d = 3, m = 2 split chart: x0 = (0, z2, 0), p0 = (z1, 0, 0), r = 1.
InitialManifold<3> manifold_e2_split3(double z_max = 8.0);
InitialManifold<1> manifold_e4_wkb_1d(double z_max = 8.0);
InitialManifold<1> manifold_e5_gaussian_1d(double z_max = 8.0);
InitialManifold<2> manifold_e5_gaussian_2d(double z_max = 8.0);

}  // namespace gbwave
