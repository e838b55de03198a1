#include "gbwave/examples/radial3d.hpp"

#include <omp.h>

namespace gbwave {

namespace {

constexpr double kSeriesRadius = 1e-6;

// f(s) = s a(s) e^{iks}/2 with g(s) = s a(s):
// f^(n) = (1/2) sum_j C(n,j) (ik)^(n-j) g^(j) e^{iks}, extended oddly to s < 0
// (so even-order derivatives flip sign, odd-order ones do not).
struct FRadial {
  const Radial3dExample& ex;

  std::array<cplx, 5> derivs(double s) const {
    const double sign = s < 0 ? -1.0 : 1.0;
    const double x = std::abs(s);
    const double a = ex.a(x), a1 = ex.da(x), a2 = ex.d2a(x), a3 = ex.d3a(x),
                 a4 = ex.d4a(x);
    const double g0 = x * a;
    const double g1 = a + x * a1;
    const double g2 = 2 * a1 + x * a2;
    const double g3 = 3 * a2 + x * a3;
    const double g4 = 4 * a3 + x * a4;
    const cplx ik(0.0, ex.k);
    const cplx e = 0.5 * std::exp(ik * x);
    std::array<cplx, 5> f;
    f[0] = e * g0;
    f[1] = e * (g1 + ik * g0);
    f[2] = e * (g2 + 2.0 * ik * g1 + ik * ik * g0);
    f[3] = e * (g3 + 3.0 * ik * g2 + 3.0 * ik * ik * g1 + ik * ik * ik * g0);
    f[4] = e * (g4 + 4.0 * ik * g3 + 6.0 * ik * ik * g2 +
                4.0 * ik * ik * ik * g1 + ik * ik * ik * ik * g0);
    // odd extension: f(-x) = -f(x), so f^(n)(-x) = (-1)^(n+1) f^(n)(x)
    if (s < 0)
      for (int n = 0; n < 5; ++n)
        if (n % 2 == 0) f[n] = -f[n];
    return f;
  }
};

// per-s-node data of the reduced integrand for one branch tau
struct SLane {
  double s, w, s2;
  cplx A, At;  // A^-(tau,s) and its tau-derivative, amplitude a(s)/2 included
  cplx C, D, Dt;
};

std::vector<SLane> build_slane(const CompositeAxis& ax, double tau,
                               const Radial3dExample& ex) {
  std::vector<SLane> lanes(ax.nodes.size());
  for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
    const double s = ax.nodes[i];
    SLane& L = lanes[i];
    L.s = s;
    L.w = ax.weights[i];
    L.s2 = s * s;
    const cplx w0(1.0 / s, 1.0);
    const cplx den = 1.0 - tau * w0;
    if (std::abs(den) < 1e-8)
      throw std::runtime_error("radial3d_superposition: amplitude pole");
    L.A = 0.5 * ex.a(s) / den;
    L.At = 0.5 * ex.a(s) * w0 / (den * den);
    L.C = cplx(1.0, -(s - tau));
    const cplx bm = radial3d_b(-tau, s);
    L.D = 0.5 * bm;
    L.Dt = 0.5 * (bm + iu) * (bm + iu);
    if (!(bm.imag() > -1.0))
      throw std::runtime_error("radial3d_superposition: invalid Hessian");
  }
  return lanes;
}

}  // namespace

cplx radial3d_b(double tau, double s) {
  const cplx num = 1.0 - iu * tau * cplx(1.0, s);
  const cplx den = cplx(s + tau, s * tau);
  return num / den;
}

PointEval radial3d_exact(double r, double t, const Radial3dExample& ex) {
  ex.validate();
  if (r < 0) throw std::invalid_argument("radial3d_exact: r < 0");
  const FRadial F{ex};
  PointEval e;
  if (r < kSeriesRadius) {
    const auto f = F.derivs(t);
    e.u = 2.0 * f[1] + (r * r / 3.0) * f[3];
    e.ut = 2.0 * f[2] + (r * r / 3.0) * f[4];
    e.ur = (2.0 * r / 3.0) * f[3];
  } else {
    const auto fp = F.derivs(t + r);
    const auto fm = F.derivs(t - r);
    e.u = (fp[0] - fm[0]) / r;
    e.ut = (fp[1] - fm[1]) / r;
    e.ur = (fp[1] + fm[1]) / r - e.u / r;
  }
  return e;
}

std::vector<PointEval> radial3d_superposition(std::span<const double> radii,
                                              double t,
                                              const Radial3dExample& ex,
                                              const QuadratureSpec& quad) {
  ex.validate();
  if (!(t > 0)) throw std::invalid_argument("radial3d_superposition: t <= 0");
  const double k = ex.k;
  double rmax = 0;
  for (double r : radii) {
    if (r < 0) throw std::invalid_argument("radial3d_superposition: r < 0");
    rmax = std::max(rmax, r);
  }

  QuadratureSpec spec = quad;
  if (spec.panels_per_axis.empty()) {
    const int ns = static_cast<int>(2.0 * std::sqrt(k)) + 60;
    const int nv = static_cast<int>(6.5 * k * std::max(0.3, rmax) / pi) + 60;
    spec.panels_per_axis = {std::max(8, ns / spec.gauss_order + 1),
                            std::max(8, nv / spec.gauss_order + 1)};
  }
  if (spec.panels_per_axis.size() != 2)
    throw ConfigError("radial3d_superposition: two panel axes expected");

  const double pref = std::sqrt(k * k * k / (2.0 * pi));

  auto eval = [&](int level) {
    const auto sp = spec.refined(level);
    const CompositeAxis sax = CompositeAxis::build(ex.r0, ex.r1,
                                                   sp.panels_per_axis[0],
                                                   sp.gauss_order);
    const CompositeAxis vax = CompositeAxis::build(-1.0, 1.0,
                                                   sp.panels_per_axis[1],
                                                   sp.gauss_order);
    // two branches: the minus-mode reduction at tau = t and its counterpart
    // at tau = -t; d/dt of the counterpart carries a minus sign.
    const std::array<double, 2> taus = {t, -t};
    // contributions below exp(e_cut) are orders of magnitude under the
    // tolerance scale; skipping them cuts the live node set ~100x
    const double e_cut = -64.0 - std::log(1.0 + k);
    std::array<std::vector<SLane>, 2> lanes;
    for (int b = 0; b < 2; ++b) lanes[b] = build_slane(sax, taus[b], ex);

    std::vector<double> flat(radii.size() * 6);
#pragma omp parallel for schedule(static)
    for (std::int64_t ri = 0; ri < static_cast<std::int64_t>(radii.size());
         ++ri) {
      const double r = radii[ri];
      PairwiseStack<6> acc;
      for (int b = 0; b < 2; ++b) {
        const double tau = taus[b];
        const double dt_sign = b == 0 ? 1.0 : -1.0;
        for (const SLane& L : lanes[b]) {
          const double smt = L.s - tau;
          // exponent E(v) = base + lin v + quad v^2, split re/im so the decay
          // test costs a few flops before any exp/trig
          const double base_re =
              -k * (L.D.imag() * r * r) - 0.5 * k * (r * r + smt * smt);
          const double base_im = k * (tau + L.D.real() * r * r);
          const double lin_re = -k * L.C.imag() * r;
          const double lin_im = k * L.C.real() * r;
          const double quad_re = k * L.D.imag() * r * r;
          const double quad_im = -k * L.D.real() * r * r;
          // whole-row cull: the quadratic in v attains its max at an endpoint
          // or interior vertex
          {
            double m = std::max(base_re + lin_re + quad_re,
                                base_re - lin_re + quad_re);
            if (quad_re < 0) {
              const double vstar = -lin_re / (2.0 * quad_re);
              if (vstar > -1.0 && vstar < 1.0)
                m = std::max(m, base_re + 0.5 * lin_re * vstar);
            }
            if (m < e_cut) continue;
          }
          std::array<double, 6> row{};
          for (std::size_t j = 0; j < vax.nodes.size(); ++j) {
            const double v = vax.nodes[j];
            const double E_re = base_re + (lin_re + quad_re * v) * v;
            if (E_re < e_cut) continue;
            const double E_im = base_im + (lin_im + quad_im * v) * v;
            const double ex = std::exp(E_re);
            const double ee_re = ex * std::cos(E_im);
            const double ee_im = ex * std::sin(E_im);
            const double wq = L.w * vax.weights[j] * L.s2;
            const double A_re = L.A.real(), A_im = L.A.imag();
            const double val_re = wq * (A_re * ee_re - A_im * ee_im);
            const double val_im = wq * (A_re * ee_im + A_im * ee_re);
            row[0] += val_re;
            row[1] += val_im;
            // d/dtau of the exponent
            const double omv2 = 1.0 - v * v;
            const double Et_re = -k * r * v - k * r * r * L.Dt.imag() * omv2 +
                                 k * smt;
            const double Et_im = k * r * r * L.Dt.real() * omv2 + k;
            // (At + A Et) * wq * ee, signed
            const double g_re = L.At.real() + A_re * Et_re - A_im * Et_im;
            const double g_im = L.At.imag() + A_re * Et_im + A_im * Et_re;
            row[2] += dt_sign * wq * (g_re * ee_re - g_im * ee_im);
            row[3] += dt_sign * wq * (g_re * ee_im + g_im * ee_re);
            // d/dr of the exponent
            const double Er_re =
                -k * (L.C.imag() * v + 2.0 * L.D.imag() * r * omv2) - k * r;
            const double Er_im =
                k * (L.C.real() * v + 2.0 * L.D.real() * r * omv2);
            const double h_re = A_re * Er_re - A_im * Er_im;
            const double h_im = A_re * Er_im + A_im * Er_re;
            row[4] += wq * (h_re * ee_re - h_im * ee_im);
            row[5] += wq * (h_re * ee_im + h_im * ee_re);
          }
          acc.push(row);
        }
      }
      const auto s6 = acc.total();
      for (int j = 0; j < 6; ++j) flat[ri * 6 + j] = pref * s6[j];
    }
    return flat;
  };

  auto scale = [&](const std::vector<double>&) { return std::max(1.0, k); };
  const auto out = refine_to_tolerance(spec, eval, scale);

  std::vector<PointEval> res(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    res[i].u = cplx(out.values[6 * i], out.values[6 * i + 1]);
    res[i].ut = cplx(out.values[6 * i + 2], out.values[6 * i + 3]);
    res[i].ur = cplx(out.values[6 * i + 4], out.values[6 * i + 5]);
  }
  return res;
}

PointEval radial3d_superposition_at(double r, double t,
                                    const Radial3dExample& ex,
                                    const QuadratureSpec& quad) {
  const double radii[1] = {r};
  return radial3d_superposition(std::span<const double>(radii, 1), t, ex,
                                quad)[0];
}

std::pair<double, double> radial3d_energy_pair(
    double t, const Radial3dExample& ex, const QuadratureSpec& field_quad,
    const QuadratureSpec& radial_quad, RadialMeasure measure) {
  const double r_max = ex.r1 + t;
  if (radial_quad.panels_per_axis.size() != 1)
    throw ConfigError("radial3d_energy_pair: one radial panel axis expected");

  auto eval = [&](int level) {
    const auto sp = radial_quad.refined(level);
    const CompositeAxis ax =
        CompositeAxis::build(0.0, r_max, sp.panels_per_axis[0], sp.gauss_order);
    const auto gb = radial3d_superposition(ax.nodes, t, ex, field_quad);
    PairwiseStack<2> acc;
    for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
      const double r = ax.nodes[i];
      const PointEval exa = radial3d_exact(r, t, ex);
      const double meas = measure == RadialMeasure::ball3d
                              ? 4.0 * pi * r * r * ax.weights[i]
                              : ax.weights[i];
      const double num =
          std::norm(gb[i].ut - exa.ut) + std::norm(gb[i].ur - exa.ur);
      const double den = std::norm(gb[i].ut) + std::norm(gb[i].ur);
      acc.push({meas * num, meas * den});
    }
    const auto s2 = acc.total();
    return std::vector<double>{s2[0], s2[1]};
  };
  auto scale = [](const std::vector<double>& v) {
    return std::max(1.0, std::max(std::abs(v[0]), std::abs(v[1])));
  };
  const auto out = refine_to_tolerance(radial_quad, eval, scale);
  return {std::sqrt(0.5 * out.values[0]), std::sqrt(0.5 * out.values[1])};
}

}  // namespace gbwave
