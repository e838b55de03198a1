#include "gbwave/quad/tensor.hpp"

namespace gbwave {

RichardsonOutcome refine_to_tolerance(
    const QuadratureSpec& spec,
    const std::function<std::vector<double>(int level)>& eval,
    const std::function<double(const std::vector<double>&)>& tol_scale) {
  spec.validate();
  RichardsonOutcome out;
  out.values = eval(0);
  if (spec.max_refinements == 0) return out;  // trust mode

  for (int level = 1; level <= spec.max_refinements; ++level) {
    std::vector<double> fine = eval(level);
    if (fine.size() != out.values.size())
      throw std::logic_error("refine_to_tolerance: level size mismatch");
    double diff = 0;
    for (std::size_t i = 0; i < fine.size(); ++i)
      diff = std::max(diff, std::abs(fine[i] - out.values[i]));
    out.values = std::move(fine);
    out.estimate = diff;
    out.levels_used = level;
    const double scale = tol_scale ? tol_scale(out.values) : 1.0;
    if (diff <= spec.abs_tol * scale) return out;
  }
  throw NonConverged(out.estimate);
}

}  // namespace gbwave
