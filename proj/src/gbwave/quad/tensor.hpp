#pragma once

#include <functional>

#include "gbwave/quad/gauss.hpp"

namespace gbwave {

/// Composite tensor Gauss-Legendre specification. Panel counts double on
/// every axis per refinement level; the panel-doubling Richardson comparison
/// supplies the error estimate.
///
/// max_refinements == 0 selects trust mode: the rule is applied once as
/// given, no estimate is produced (reported as NaN) and convergence is not
/// checked. Used where a fixed rule is part of an experiment's definition.
struct QuadratureSpec {
  std::vector<int> panels_per_axis;
  int gauss_order = 5;
  double abs_tol = 1e-8;
  int max_refinements = 3;

  void validate() const {
    if (gauss_order < 2) throw ConfigError("QuadratureSpec: gauss_order < 2");
    if (abs_tol <= 0) throw ConfigError("QuadratureSpec: abs_tol <= 0");
  }
  QuadratureSpec refined(int level) const {
    QuadratureSpec s = *this;
    for (auto& p : s.panels_per_axis) p <<= level;
    return s;
  }
};

/// Drives panel-doubling refinement over an arbitrary "evaluate everything at
/// this level" closure. `eval(level)` returns one flat vector of reals (all
/// targets and quantities); convergence is max |fine - coarse| <= tol, with
/// tol = spec.abs_tol * tol_scale(fine_values).
///
/// Returns {values, estimate, levels_used}; throws NonConverged when the
/// refinement budget is exhausted.
struct RichardsonOutcome {
  std::vector<double> values;
  double estimate = std::numeric_limits<double>::quiet_NaN();
  int levels_used = 0;
};

RichardsonOutcome refine_to_tolerance(
    const QuadratureSpec& spec,
    const std::function<std::vector<double>(int level)>& eval,
    const std::function<double(const std::vector<double>&)>& tol_scale =
        nullptr);

}  // namespace gbwave
