#include "gbwave/metrics/norms.hpp"

#include <omp.h>

namespace gbwave {

double linf_norm(std::span<const cplx> v) {
  double m = 0;
  for (const cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

double l2_norm(std::span<const cplx> v, double cell_measure) {
  PairwiseStack<1> acc;
  for (const cplx& x : v) acc.push({std::norm(x)});
  return std::sqrt(cell_measure * acc.total()[0]);
}

double energy_from_fields(std::span<const cplx> ut,
                          std::span<const std::span<const cplx>> grads,
                          double cell_measure, double c) {
  PairwiseStack<1> acc;
  const double cinv2 = 1.0 / (c * c);
  for (std::size_t i = 0; i < ut.size(); ++i) {
    double e = cinv2 * std::norm(ut[i]);
    for (const auto& g : grads) e += std::norm(g[i]);
    acc.push({e});
  }
  return std::sqrt(0.5 * cell_measure * acc.total()[0]);
}

double relative_error(std::span<const cplx> approx,
                      std::span<const cplx> reference, NormKind kind,
                      std::span<const cplx> denominator, double cell_measure) {
  if (approx.size() != reference.size())
    throw std::invalid_argument("relative_error: shape mismatch");
  std::vector<cplx> diff(approx.size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = approx[i] - reference[i];
  double num = 0, den = 0;
  switch (kind) {
    case NormKind::linf:
      num = linf_norm(diff);
      den = linf_norm(denominator);
      break;
    case NormKind::l2:
      num = l2_norm(diff, cell_measure);
      den = l2_norm(denominator, cell_measure);
      break;
    case NormKind::point:
      if (diff.size() != 1)
        throw std::invalid_argument("relative_error: point norm needs 1 value");
      num = std::abs(diff[0]);
      den = std::abs(denominator[0]);
      break;
    case NormKind::energy:
      throw std::invalid_argument(
          "relative_error: energy norm needs paired (u, ut) fields; use "
          "energy_from_fields");
  }
  if (den == 0) throw std::invalid_argument("relative_error: zero denominator");
  return num / den;
}

double radial_energy_norm(const RadialSampler& sample, double r_max,
                          const QuadratureSpec& quad) {
  if (!(r_max > 0)) throw std::invalid_argument("radial_energy_norm: r_max <= 0");
  if (quad.panels_per_axis.size() != 1)
    throw std::invalid_argument("radial_energy_norm: need 1 panel axis");

  auto eval = [&](int level) {
    const auto spec = quad.refined(level);
    const CompositeAxis ax = CompositeAxis::build(0.0, r_max,
                                                  spec.panels_per_axis[0],
                                                  spec.gauss_order);
    const std::size_t n = ax.nodes.size();
    std::vector<cplx> ut(n), dudr(n);
    sample(ax.nodes, ut, dudr);
    PairwiseStack<1> acc;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ax.nodes[i];
      const double g = (std::norm(ut[i]) + std::norm(dudr[i])) * 4.0 * pi * r * r;
      acc.push({ax.weights[i] * g});
    }
    return std::vector<double>{acc.total()[0]};
  };
  // tolerance scales with the integral itself: these are energy integrands
  // whose magnitude grows with k.
  auto scale = [](const std::vector<double>& v) {
    return std::max(1.0, std::abs(v[0]));
  };
  const auto out = refine_to_tolerance(quad, eval, scale);
  return std::sqrt(0.5 * out.values[0]);
}

double beta_rate(double sup_t_k, double sup_0_k, double sup_t_2k,
                 double sup_0_2k) {
  if (!(sup_t_k > 0 && sup_0_k > 0 && sup_t_2k > 0 && sup_0_2k > 0))
    throw std::invalid_argument("beta_rate: sup norms must be positive");
  return std::log2((sup_t_2k / sup_0_2k) / (sup_t_k / sup_0_k));
}

}  // namespace gbwave
