#pragma once

#include "gbwave/common.hpp"

namespace gbwave {

/// Concentrated spherical-wave example (3D, beams indexed by the unit sphere).
struct SphericalExample {
  double k = 0;
  void validate() const {
    if (!(k >= 1)) throw ConfigError("SphericalExample: k must be >= 1");
  }
};

/// Radial 3D focusing example with amplitude a(s) = 4 (s-r0)^4 (s-r1)^4 on
/// [r0, r1]. Two beam families (outgoing / incoming) from the same data.
struct Radial3dExample {
  double k = 0;
  double r0 = 0.1;
  double r1 = 1.0;

  void validate() const {
    if (!(k >= 1)) throw ConfigError("Radial3dExample: k must be >= 1");
    if (!(0 < r0 && r0 < r1)) throw ConfigError("Radial3dExample: need 0 < r0 < r1");
  }
  double a(double s) const {
    if (s <= r0 || s >= r1) return 0.0;
    const double u = s - r0, v = s - r1;
    const double u2 = u * u, v2 = v * v;
    return 4.0 * u2 * u2 * v2 * v2;
  }
  double da(double s) const {
    if (s <= r0 || s >= r1) return 0.0;
    const double u = s - r0, v = s - r1;
    return 16.0 * u * u * u * v * v * v * (u + v);
  }
  double d2a(double s) const {
    if (s <= r0 || s >= r1) return 0.0;
    const double u = s - r0, v = s - r1;
    return 16.0 * u * u * v * v * (3.0 * v * v + 8.0 * u * v + 3.0 * u * u);
  }
  double d3a(double s) const {
    if (s <= r0 || s >= r1) return 0.0;
    const double u = s - r0, v = s - r1;
    return 96.0 * u * v *
           (v * v * v + 6.0 * u * v * v + 6.0 * u * u * v + u * u * u);
  }
  double d4a(double s) const {
    if (s <= r0 || s >= r1) return 0.0;
    const double u = s - r0, v = s - r1;
    const double u2 = u * u, v2 = v * v;
    return 96.0 * (v2 * v2 + 16.0 * u * v * v2 + 36.0 * u2 * v2 +
                   16.0 * u2 * u * v + u2 * u2);
  }
};

/// 2D fold-caustic example: beams tangent to the unit circle, amplitude
/// (s-s0)^2 (s-s1)^2 on [s0, s1], periodic box side L. k must be an integer
/// so exp(ikS) is single-valued on the annulus.
struct AnnulusExample {
  double k = 0;
  double s0 = 0.25;
  double s1 = 0.75;
  double L = 4.0;
  bool include_plus_branch = false;

  void validate() const {
    if (!(k >= 1)) throw ConfigError("AnnulusExample: k must be >= 1");
    if (k != std::floor(k))
      throw ConfigError("AnnulusExample: k must be an integer");
    if (!(0 < s0 && s0 < s1 && s1 < 1))
      throw ConfigError("AnnulusExample: need 0 < s0 < s1 < 1");
    if (!(L > 0)) throw ConfigError("AnnulusExample: L must be positive");
  }
  double A0(double s) const {
    if (s <= s0 || s >= s1) return 0.0;
    const double u = s - s0, v = s - s1;
    return u * u * v * v;
  }
};

}  // namespace gbwave
