#pragma once

#include "gbwave/metrics/eoc.hpp"
#include "gbwave/quad/tensor.hpp"

namespace gbwave {

inline constexpr const char* kVersion = "0.1.0";

struct NormSpec {
  NormKind kind;
  DenominatorKind denom;
};

struct GridSpec {
  int K = 512;
  double L = 4.0;
};

/// One experiment: which example, which frequency ladder, which norms at
/// which times, plus grid and quadrature settings.
struct ExperimentConfig {
  std::string example;  // spherical4 | radial3d5 | annulus6 | oracle7-e4 | oracle7-e5
  std::vector<double> k_values;
  std::vector<double> times;
  std::vector<NormSpec> norms;
  GridSpec grid;
  QuadratureSpec quadrature;         // field quadrature (auto panels if empty)
  QuadratureSpec radial_quadrature;  // radial norm quadrature (1 axis)
  std::string output_dir = "out";
  bool include_plus_branch = false;
  bool emit_fields = false;
  bool beta_rates = false;  // record sup-norm growth instead of errors

  // example parameters
  double r0 = 0.1, r1 = 1.0;   // radial3d amplitude support
  double s0 = 0.25, s1 = 0.75; // annulus amplitude support

  void validate() const;
  /// Canonical key=value text (config snapshot; also what gets hashed).
  std::string canonical() const;
};

/// Key/value text with [section] headers; '#' and ';' start comments.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

std::uint64_t fnv1a(const std::string& s);

}  // namespace gbwave
