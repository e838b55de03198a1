#include "gbwave/examples/spherical.hpp"

#include <omp.h>

#include "gbwave/metrics/norms.hpp"

namespace gbwave {

namespace {

constexpr double kSeriesRadius = 1e-6;

// f(r) = exp(-ikr - kr^2/2)/k and derivatives f^(n) = P_n(c) f with
// c(r) = -ik - kr, P_1 = c, P_2 = c^2 - k, P_3 = c^3 - 3kc, P_4 = c^4 - 6kc^2 + 3k^2.
struct Fk {
  double k;
  cplx f(double r) const {
    return std::exp(cplx(-0.5 * k * r * r, -k * r)) / k;
  }
  cplx c(double r) const { return cplx(-k * r, -k); }
  cplx f1(double r) const { return c(r) * f(r); }
  cplx f2(double r) const {
    const cplx cc = c(r);
    return (cc * cc - k) * f(r);
  }
  cplx f3(double r) const {
    const cplx cc = c(r);
    return (cc * cc * cc - 3.0 * k * cc) * f(r);
  }
  cplx f4(double r) const {
    const cplx cc = c(r), c2 = cc * cc;
    return (c2 * c2 - 6.0 * k * c2 + 3.0 * k * k) * f(r);
  }
};

}  // namespace

PointEval spherical_exact(double r, double t, double k) {
  if (r < 0) throw std::invalid_argument("spherical_exact: r < 0");
  const Fk F{k};
  PointEval e;
  if (r < kSeriesRadius) {
    e.u = -2.0 * F.f1(t) - (r * r / 3.0) * F.f3(t);
    e.ut = -2.0 * F.f2(t) - (r * r / 3.0) * F.f4(t);
    e.ur = -(2.0 * r / 3.0) * F.f3(t);
  } else {
    const cplx fm = F.f(t - r), fp = F.f(t + r);
    const cplx dm = F.f1(t - r), dp = F.f1(t + r);
    e.u = (fm - fp) / r;
    e.ut = (dm - dp) / r;
    e.ur = (-dm - dp) / r - e.u / r;
  }
  return e;
}

std::vector<PointEval> spherical_superposition(std::span<const double> radii,
                                               double t,
                                               const SphericalExample& ex,
                                               const QuadratureSpec& quad) {
  ex.validate();
  if (t < 0) throw std::invalid_argument("spherical_superposition: t < 0");
  const double k = ex.k;
  double rmax = 0;
  for (double r : radii) {
    if (r < 0) throw std::invalid_argument("spherical_superposition: r < 0");
    rmax = std::max(rmax, r);
  }

  QuadratureSpec spec = quad;
  if (spec.panels_per_axis.empty()) {
    const double rate = k * std::max(0.5, rmax * (1.0 + t * rmax / (1.0 + t * t)));
    const int nodes = static_cast<int>(6.5 * rate / pi) + 80;
    spec.panels_per_axis = {std::max(8, nodes / spec.gauss_order + 1)};
  }
  if (spec.panels_per_axis.size() != 1)
    throw ConfigError("spherical_superposition: one panel axis expected");

  const cplx alpha = iu / cplx(1.0, t);
  const cplx dalpha = 1.0 / (cplx(1.0, t) * cplx(1.0, t));
  const double gp = (1.0 - t * t) / (2.0 * (1.0 + t * t) * (1.0 + t * t));
  const double hp = -2.0 * t / ((1.0 + t * t) * (1.0 + t * t));
  const double h = 1.0 / (1.0 + t * t);

  auto eval = [&](int level) {
    const auto sp = spec.refined(level);
    const CompositeAxis ax =
        CompositeAxis::build(-1.0, 1.0, sp.panels_per_axis[0], sp.gauss_order);
    std::vector<double> flat(radii.size() * 6);
#pragma omp parallel for schedule(static)
    for (std::int64_t ri = 0; ri < static_cast<std::int64_t>(radii.size());
         ++ri) {
      const double r = radii[ri];
      PairwiseStack<6> acc;
      for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
        const double s = ax.nodes[i], w = ax.weights[i];
        const double oms = 1.0 - s * s;
        const double rst = r * s - t;
        const cplx phi(r * s - t + t * r * r * oms * 0.5 * h,
                       0.5 * (rst * rst + r * r * oms * h));
        const cplx E = std::exp(iu * k * phi);
        const cplx phit(-1.0 + r * r * oms * gp, -rst + 0.5 * r * r * oms * hp);
        const cplx phir(s + r * t * oms * h, s * rst + r * oms * h);
        const cplx v = w * E;
        const cplx vt = w * (iu * k * phit) * E;
        const cplx vr = w * (iu * k * phir) * E;
        acc.push({v.real(), v.imag(), vt.real(), vt.imag(), vr.real(), vr.imag()});
      }
      const auto s6 = acc.total();
      for (int j = 0; j < 6; ++j) flat[ri * 6 + j] = s6[j];
    }
    return flat;
  };

  auto scale = [&](const std::vector<double>&) { return std::max(1.0, k); };
  const auto out = refine_to_tolerance(spec, eval, scale);

  std::vector<PointEval> res(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const cplx I(out.values[6 * i], out.values[6 * i + 1]);
    const cplx It(out.values[6 * i + 2], out.values[6 * i + 3]);
    const cplx Ir(out.values[6 * i + 4], out.values[6 * i + 5]);
    res[i].u = alpha * I;
    res[i].ut = dalpha * I + alpha * It;
    res[i].ur = alpha * Ir;
  }
  return res;
}

PointEval spherical_superposition_at(double r, double t,
                                     const SphericalExample& ex,
                                     const QuadratureSpec& quad) {
  const double radii[1] = {r};
  return spherical_superposition(std::span<const double>(radii, 1), t, ex,
                                 quad)[0];
}

double spherical_energy_error(double t, const SphericalExample& ex,
                              const QuadratureSpec& field_quad,
                              const QuadratureSpec& radial_quad) {
  const double r_max = t + 1.5;
  auto sampler = [&](std::span<const double> r, std::span<cplx> ut,
                     std::span<cplx> dudr) {
    const auto gb = spherical_superposition(r, t, ex, field_quad);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const PointEval exa = spherical_exact(r[i], t, ex.k);
      ut[i] = gb[i].ut - exa.ut;
      dudr[i] = gb[i].ur - exa.ur;
    }
  };
  return radial_energy_norm(sampler, r_max, radial_quad);
}

}  // namespace gbwave
