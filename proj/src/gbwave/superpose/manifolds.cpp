#include "gbwave/superpose/manifold.hpp"

#include "gbwave/examples/radial3d.hpp"

namespace gbwave {

namespace {

Vec<3> omega_of(double rho, double phi) {
  const double sr = std::sin(rho);
  return {sr * std::cos(phi), sr * std::sin(phi), std::cos(rho)};
}

double gaussian_amp(std::span<const double> z) {
  double q = 0;
  for (double v : z) q += v * v;
  return std::exp(-0.5 * q);
}

}  // namespace

InitialManifold<3> manifold_spherical(const SphericalExample& ex) {
  ex.validate();
  InitialManifold<3> m;
  m.dim_m = 2;
  m.axes = {AxisDef{0.0, pi, false}, AxisDef{0.0, 2.0 * pi, true}};
  m.weight = [](std::span<const double> z) { return std::sin(z[0]); };
  auto beam = [](std::span<const double> z, double t) {
    const Vec<3> w = omega_of(z[0], z[1]);
    const cplx ct = iu / cplx(1.0, t);          // transverse Hessian entry
    const cplx dct = 1.0 / (cplx(1.0, t) * cplx(1.0, t));
    BeamAt<3> b;
    b.x = scale(t, w);
    b.dx = w;
    b.p = w;
    b.S = 0;
    b.M = SymC<3>::outer(iu - ct, w) + SymC<3>::identity(ct);
    b.dM = SymC<3>::outer(-dct, w) + SymC<3>::identity(dct);
    b.A = iu / (2.0 * pi * cplx(1.0, t));
    b.dA = dct / (2.0 * pi);
    return b;
  };
  m.beam_at = beam;
  m.chart = [beam](std::span<const double> z) {
    const BeamAt<3> b = beam(z, 0.0);
    return ChartPoint<3>{b.x, b.p, b.S, b.M, b.A};
  };
  m.panel_hint = [](double k, double xmax, int order) {
    const int n = static_cast<int>(4.0 * k * std::max(0.5, xmax)) + 48;
    return std::vector<int>{std::max(6, n / order + 1),
                            std::max(6, n / order + 1)};
  };
  return m;
}

InitialManifold<3> manifold_radial3d(const Radial3dExample& ex) {
  ex.validate();
  InitialManifold<3> m;
  m.dim_m = 3;
  m.axes = {AxisDef{ex.r0, ex.r1, false}, AxisDef{0.0, pi, false},
            AxisDef{0.0, 2.0 * pi, true}};
  m.weight = [](std::span<const double> z) {
    return z[0] * z[0] * std::sin(z[1]);
  };
  auto beam = [ex](std::span<const double> z, double t) {
    const double s = z[0];
    const Vec<3> w = omega_of(z[1], z[2]);
    const cplx bm = radial3d_b(-t, s);
    const cplx dbm = (bm + iu) * (bm + iu);  // d/dt of b(-t, s)
    const cplx asym(1.0 / s, 1.0);           // 1/s + i
    const cplx den = 1.0 - t * asym;
    BeamAt<3> b;
    b.x = scale(s - t, w);
    b.dx = {-w[0], -w[1], -w[2]};
    b.p = w;
    b.S = s;
    b.M = SymC<3>::outer(-bm, w) + SymC<3>::identity(bm + iu);
    b.dM = SymC<3>::outer(-dbm, w) + SymC<3>::identity(dbm);
    b.A = 0.5 * ex.a(s) / den;
    b.dA = b.A * asym / den;
    return b;
  };
  m.beam_at = beam;
  m.chart = [beam](std::span<const double> z) {
    const BeamAt<3> b = beam(z, 0.0);
    return ChartPoint<3>{b.x, b.p, b.S, b.M, b.A};
  };
  m.panel_hint = [ex](double k, double xmax, int order) {
    const int ns = static_cast<int>(2.0 * std::sqrt(k)) + 40;
    const int na = static_cast<int>(4.0 * k * std::max(0.3, xmax)) + 48;
    return std::vector<int>{std::max(6, ns / order + 1),
                            std::max(6, na / order + 1),
                            std::max(6, na / order + 1)};
  };
  return m;
}

// ---- static quadratic-phase charts used as quadrature oracles ----

namespace {

template <int D>
InitialManifold<D> box_manifold(int m, double z_max) {
  InitialManifold<D> man;
  man.dim_m = m;
  man.axes.assign(m, AxisDef{-z_max, z_max, false});
  man.weight = [](std::span<const double>) { return 1.0; };
  man.check_nonzero_momentum = false;  // p(z) = z passes through zero
  return man;
}

std::vector<int> box_hint(int m, double k, double xmax, double z_max,
                          int order) {
  // oscillation rate k*xmax plus envelope resolution ~ sqrt(1+k)
  const int n = static_cast<int>(2.1 * k * xmax * z_max / pi +
                                 4.0 * z_max * std::sqrt(1.0 + k)) + 32;
  const int panels = std::max(4, n / order + 1);
  return std::vector<int>(m, panels);
}

}  // namespace

InitialManifold<1> manifold_e1_box_1d(double z_max) {
  InitialManifold<1> man = box_manifold<1>(1, z_max);
  man.chart = [](std::span<const double> z) {
    return ChartPoint<1>{{0.0}, {z[0]}, 0.0, SymC<1>::identity(iu),
                         gaussian_amp(z) / std::sqrt(2.0 * pi)};
  };
  man.panel_hint = [z_max](double kk, double xmax, int order) {
    return box_hint(1, kk, std::max(xmax, 0.3), z_max, order);
  };
  return man;
}

InitialManifold<3> manifold_e2_split3(double z_max) {
  InitialManifold<3> man = box_manifold<3>(2, z_max);
  man.chart = [](std::span<const double> z) {
    return ChartPoint<3>{{0.0, z[1], 0.0}, {z[0], 0.0, 0.0}, 0.0,
                         SymC<3>::identity(iu), gaussian_amp(z)};
  };
  man.panel_hint = [z_max](double kk, double xmax, int order) {
    return box_hint(2, kk, std::max(xmax, 0.3), z_max, order);
  };
  return man;
}

InitialManifold<1> manifold_e4_wkb_1d(double z_max) {
  InitialManifold<1> man = box_manifold<1>(1, z_max);
  man.chart = [](std::span<const double> z) {
    SymC<1> M = SymC<1>::identity(cplx(1.0, 1.0));  // d2(S0) + i
    return ChartPoint<1>{{z[0]}, {z[0]}, 0.5 * z[0] * z[0], M,
                         gaussian_amp(z)};
  };
  // the z-integrand here is non-oscillatory (the phase's z-dependence is
  // purely imaginary): envelope resolution only.
  man.panel_hint = [z_max](double kk, double, int order) {
    const int n = static_cast<int>(4.0 * z_max * std::sqrt(1.0 + kk)) + 32;
    return std::vector<int>{std::max(4, n / order + 1)};
  };
  return man;
}

InitialManifold<1> manifold_e5_gaussian_1d(double z_max) {
  InitialManifold<1> man = box_manifold<1>(1, z_max);
  man.chart = [](std::span<const double> z) {
    return ChartPoint<1>{{z[0]}, {z[0]}, z[0] * z[0], SymC<1>::identity(iu),
                         gaussian_amp(z)};
  };
  man.panel_hint = [z_max](double kk, double xmax, int order) {
    return box_hint(1, kk, std::max(xmax, 0.3), z_max, order);
  };
  return man;
}

InitialManifold<2> manifold_e5_gaussian_2d(double z_max) {
  InitialManifold<2> man = box_manifold<2>(2, z_max);
  man.chart = [](std::span<const double> z) {
    const Vec<2> zz{z[0], z[1]};
    return ChartPoint<2>{zz, zz, z[0] * z[0] + z[1] * z[1],
                         SymC<2>::identity(iu), gaussian_amp(z)};
  };
  man.panel_hint = [z_max](double kk, double xmax, int order) {
    return box_hint(2, kk, std::max(xmax, 0.3), z_max, order);
  };
  return man;
}

}  // namespace gbwave
