#pragma once

#include <functional>
#include <span>

#include "gbwave/metrics/eoc.hpp"
#include "gbwave/quad/tensor.hpp"

namespace gbwave {

/// Grid norms over sampled complex values (deterministic pairwise sums).
double linf_norm(std::span<const cplx> v);
double l2_norm(std::span<const cplx> v, double cell_measure);

/// Energy norm from explicitly supplied component fields:
/// (1/2 sum h^d (c^-2 |ut|^2 + sum_i |gi|^2))^(1/2).
double energy_from_fields(std::span<const cplx> ut,
                          std::span<const std::span<const cplx>> grads,
                          double cell_measure, double c = 1.0);

/// Numerator norm of (approx - reference) divided by the denominator norm.
/// Shapes must match; the denominator must not vanish.
double relative_error(std::span<const cplx> approx,
                      std::span<const cplx> reference, NormKind kind,
                      std::span<const cplx> denominator, double cell_measure);

/// Radial 3D energy norm (1/2 int_0^rmax (|ut|^2 + |du/dr|^2) 4 pi r^2 dr)^(1/2)
/// with ut and du/dr supplied analytically by the example. The sampler fills
/// both arrays for a batch of radii (parallelized over the batch).
using RadialSampler = std::function<void(
    std::span<const double> r, std::span<cplx> ut, std::span<cplx> dudr)>;

double radial_energy_norm(const RadialSampler& sample, double r_max,
                          const QuadratureSpec& quad);

/// Figure-style sup-norm growth exponent between frequencies k and 2k:
/// log2( (sup_t/sup_0 at 2k) / (sup_t/sup_0 at k) ).
double beta_rate(double sup_t_k, double sup_0_k, double sup_t_2k,
                 double sup_0_2k);

}  // namespace gbwave
