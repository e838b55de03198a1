#pragma once

#include <span>

#include "gbwave/common.hpp"

namespace gbwave {

/// Closed forms of the static quadratic-phase superpositions used to validate
/// the quadrature engine, with the norm-scaling exponent each one exhibits.
enum class OracleId {
  e1_sphere_point,  // d=3, m=2 point source on the unit sphere of momenta
  e2_split,         // split chart, r = 1 oscillatory direction
  e4_wkb,           // WKB quadratic-phase data, m = d
  e5_gaussian,      // oscillatory pairing x.z, m = d
};

OracleId oracle_from_string(const std::string& s);

struct OracleValue {
  cplx value;
  /// log-log slope in k of the associated norm (energy for e1/e2, grad-L2
  /// for e4, L2 for e5).
  double scaling_exponent;
  const char* norm_label;
};

/// Closed-form value of the superposition at x for the given example. The
/// split example fixes r = 1; d and m are constrained per example (e1: d=3
/// m=2; e4/e5: m = d).
OracleValue closed_form_superposition_oracle(OracleId id,
                                             std::span<const double> x,
                                             double k, int d, int m);

/// Exact L2 norm of the e5 field, (2 pi k/(k+1))^(d/2) (pi/k)^(d/4).
double e5_l2_norm(double k, int d);

}  // namespace gbwave
