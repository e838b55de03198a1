#include "gbwave/quad/gauss.hpp"

#include <map>
#include <mutex>

namespace gbwave {

namespace {

GaussRule compute_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  const long double tol = 1e-19L;
  for (int i = 1; i <= m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    long double z = std::cos(static_cast<long double>(pi) * (i - 0.25L) /
                             (order + 0.5L));
    long double pp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p1 = 1, p2 = 0;
      for (int j = 1; j <= order; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1);
      const long double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < tol) break;
    }
    rule.nodes[i - 1] = static_cast<double>(-z);
    rule.nodes[order - i] = static_cast<double>(z);
    const long double w = 2.0L / ((1 - z * z) * pp * pp);
    rule.weights[i - 1] = static_cast<double>(w);
    rule.weights[order - i] = static_cast<double>(w);
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_nodes(int order) {
  if (order < 2 || order > 64)
    throw std::invalid_argument("gauss_legendre_nodes: order must be in [2, 64]");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

CompositeAxis CompositeAxis::build(double lo, double hi, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("CompositeAxis: panels < 1");
  const GaussRule& gl = gauss_legendre_nodes(order);
  CompositeAxis ax;
  ax.panels = panels;
  ax.order = order;
  ax.nodes.reserve(static_cast<std::size_t>(panels) * order);
  ax.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    for (int j = 0; j < order; ++j) {
      ax.nodes.push_back(a + 0.5 * h * (1.0 + gl.nodes[j]));
      ax.weights.push_back(0.5 * h * gl.weights[j]);
    }
  }
  return ax;
}

}  // namespace gbwave
