#pragma once

#include <vector>

#include "gbwave/common.hpp"

namespace gbwave {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre nodes/weights on [-1,1], orders 2..64. Computed by Newton
/// iteration on the Legendre recurrence in long double and cached.
/// Exact for polynomials of degree <= 2*order - 1.
const GaussRule& gauss_legendre_nodes(int order);

/// One axis of a composite rule: `panels` equal panels on [lo, hi], each
/// carrying a Gauss-Legendre rule of the given order.
struct CompositeAxis {
  std::vector<double> nodes;
  std::vector<double> weights;
  int panels = 0;
  int order = 0;

  static CompositeAxis build(double lo, double hi, int panels, int order);
};

}  // namespace gbwave
