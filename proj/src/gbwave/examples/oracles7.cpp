#include "gbwave/examples/oracles7.hpp"

namespace gbwave {

OracleId oracle_from_string(const std::string& s) {
  if (s == "e1-sphere-point") return OracleId::e1_sphere_point;
  if (s == "e2-split") return OracleId::e2_split;
  if (s == "e4-wkb") return OracleId::e4_wkb;
  if (s == "e5-gaussian") return OracleId::e5_gaussian;
  throw ConfigError("unknown oracle id: " + s);
}

OracleValue closed_form_superposition_oracle(OracleId id,
                                             std::span<const double> x,
                                             double k, int d, int m) {
  if (!(k >= 1)) throw std::invalid_argument("oracle: k must be >= 1");
  double r2 = 0;
  for (double c : x) r2 += c * c;
  const double r = std::sqrt(r2);

  switch (id) {
    case OracleId::e1_sphere_point: {
      if (d != 3 || m != 2)
        throw std::invalid_argument("e1-sphere-point: fixed at d=3, m=2");
      // 2 i sin(kr)/r e^{-k r^2/2}, limit 2ik at r -> 0
      const double sinc_k = r < 1e-8 ? k : std::sin(k * r) / r;
      return {2.0 * iu * sinc_k * std::exp(-0.5 * k * r2),
              1.0 - (d - m) / 4.0, "energy"};
    }
    case OracleId::e2_split: {
      // r = 1 oscillatory coordinate: x = (x1 | x2 (m-1) | x3 (d-m))
      if (!(1 <= m && m <= d) || static_cast<int>(x.size()) != d)
        throw std::invalid_argument("e2-split: need |x| = d, 1 <= m <= d");
      const int rr = 1;
      double x1sq = x[0] * x[0];
      double x2sq = 0, x3sq = 0;
      for (int i = rr; i < m; ++i) x2sq += x[i] * x[i];
      for (int i = m; i < d; ++i) x3sq += x[i] * x[i];
      const double amp = std::pow(k, 0.5 * m) * std::pow(2.0 * pi, 0.5 * m) *
                         std::pow(1.0 + k, 0.5 * (rr - m));
      const double expo = -0.5 * k * (x1sq + x3sq) - 0.5 * k * k * x1sq -
                          0.5 * k / (1.0 + k) * x2sq;
      return {amp * std::exp(expo), 1.0 - (d - m) / 4.0, "grad_l2"};
    }
    case OracleId::e4_wkb: {
      if (m != d) throw std::invalid_argument("e4-wkb: m = d required");
      const double amp = std::pow(2.0 * pi * k / (k + 1.0), 0.5 * d);
      const cplx expo(-0.5 * k / (k + 1.0) * r2, 0.5 * k * r2);
      return {amp * std::exp(expo), 1.0, "grad_l2"};
    }
    case OracleId::e5_gaussian: {
      if (m != d) throw std::invalid_argument("e5-gaussian: m = d required");
      const double amp = std::pow(2.0 * pi * k / (k + 1.0), 0.5 * d);
      const cplx expo(-0.5 * k * r2, k * k / (k + 1.0) * r2);
      return {amp * std::exp(expo), -0.25 * d, "l2"};
    }
  }
  throw std::logic_error("unreachable");
}

double e5_l2_norm(double k, int d) {
  return std::pow(2.0 * pi * k / (k + 1.0), 0.5 * d) *
         std::pow(pi / k, 0.25 * d);
}

}  // namespace gbwave
