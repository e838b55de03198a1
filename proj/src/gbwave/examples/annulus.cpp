#include "gbwave/examples/annulus.hpp"

namespace gbwave {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Frame {
  Vec<2> tau;  // ray direction (sin th, -cos th)
  Vec<2> n;    // normal (cos th, sin th)
  Vec<2> c;    // tangency anchor sqrt(2) e_{th + pi/4}
};

Frame frame_at(double theta) {
  Frame f;
  const double ct = std::cos(theta), st = std::sin(theta);
  f.tau = {st, -ct};
  f.n = {ct, st};
  f.c = {kSqrt2 * std::cos(theta + 0.25 * pi),
         kSqrt2 * std::sin(theta + 0.25 * pi)};
  return f;
}

// M = i P + b P_perp with P = tau tau^T, P_perp = n n^T.
SymC<2> hessian_from(const Frame& f, cplx b) {
  SymC<2> M = SymC<2>::outer(iu, f.tau);
  M += SymC<2>::outer(b, f.n);
  return M;
}

// beam (minus the plus-family flip) at (theta, s, t); sign = +1 for the
// forward family, -1 for the opposite-direction one.
BeamAt<2> annulus_beam_at(double theta, double s, double t, double sign,
                          const AnnulusExample& ex) {
  const Frame f = frame_at(theta);
  const cplx b0 = annulus_b(0.0, s);
  const cplx bt = annulus_b(sign * t, s);
  const cplx root_arg = 1.0 + sign * t * b0;
  BeamAt<2> b;
  const double ts = sign * t + s;
  b.x = {f.c[0] + ts * f.tau[0], f.c[1] + ts * f.tau[1]};
  b.dx = {sign * f.tau[0], sign * f.tau[1]};
  b.p = f.tau;
  b.dp = {0, 0};
  b.S = -theta + s;
  b.dS = 0;
  b.M = hessian_from(f, bt);
  b.dM = SymC<2>::outer(sign * (-bt * bt), f.n);
  // principal square root, continuous from 1 at t = 0: the argument stays in
  // the upper half plane (forward family) or right half plane (opposite one),
  // never crossing the cut.
  b.A = ex.A0(s) / std::sqrt(root_arg);
  b.dA = -0.5 * sign * bt * b.A;
  return b;
}

InitialManifold<2> annulus_manifold(const AnnulusExample& ex, double sign) {
  InitialManifold<2> m;
  m.dim_m = 2;
  m.axes = {AxisDef{0.0, 2.0 * pi, true}, AxisDef{ex.s0, ex.s1, false}};
  m.weight = [](std::span<const double> z) { return 1.0 - z[1]; };
  m.chart = [ex, sign](std::span<const double> z) {
    const BeamAt<2> b = annulus_beam_at(z[0], z[1], 0.0, sign, ex);
    return ChartPoint<2>{b.x, b.p, b.S, b.M, b.A};
  };
  m.beam_at = [ex, sign](std::span<const double> z, double t) {
    return annulus_beam_at(z[0], z[1], t, sign, ex);
  };
  m.panel_hint = [ex](double k, double, int order) {
    const int ntheta = static_cast<int>(34.0 * std::sqrt(k)) + 64;
    const int ns = static_cast<int>(5.5 * std::sqrt(k) *
                                    (ex.s1 - ex.s0) / 0.5) + 24;
    return std::vector<int>{std::max(8, ntheta / order + 1),
                            std::max(4, ns / order + 1)};
  };
  return m;
}

}  // namespace

InitialManifold<2> manifold_annulus(const AnnulusExample& ex) {
  ex.validate();
  return annulus_manifold(ex, 1.0);
}

cplx annulus_b(double t, double s) {
  const cplx num(1.0, s - 1.0);
  const cplx den(t + s - 1.0, t * (s - 1.0));
  return num / den;
}

std::pair<BeamPhase<2>, cplx> annulus_beam(double theta, double s, double t,
                                           const AnnulusExample& ex) {
  ex.validate();
  if (s == 1.0)
    throw std::invalid_argument("annulus_beam: s = 1 is the tangency point");
  if (!(s >= 0 && s < 1))
    throw std::invalid_argument("annulus_beam: s must be in [0, 1)");
  const BeamAt<2> b = annulus_beam_at(theta, s, t, 1.0, ex);
  return {BeamPhase<2>{b.x, b.p, b.S, b.M}, b.A};
}

std::vector<Vec<2>> grid_targets(int K, double L) {
  std::vector<Vec<2>> pts;
  pts.reserve(static_cast<std::size_t>(K) * K);
  const double h = L / K;
  for (int iy = 0; iy < K; ++iy)
    for (int ix = 0; ix < K; ++ix)
      pts.push_back({-0.5 * L + ix * h, -0.5 * L + iy * h});
  return pts;
}

SuperpositionResult<2> annulus_superposition(std::span<const Vec<2>> targets,
                                             double t,
                                             const AnnulusExample& ex,
                                             const QuadratureSpec& quad,
                                             Want want, ExecPolicy policy) {
  ex.validate();
  if (t < 0) throw std::invalid_argument("annulus_superposition: t < 0");
  const InitialManifold<2> m = annulus_manifold(ex, 1.0);
  SuperpositionResult<2> res =
      integrate_superposition(m, t, ex.k, targets, quad, want, policy);
  if (ex.include_plus_branch) {
    const InitialManifold<2> mp = annulus_manifold(ex, -1.0);
    const SuperpositionResult<2> rp =
        integrate_superposition(mp, t, ex.k, targets, quad, want, policy);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      res.values[i] += rp.values[i];
      if (want.dt) res.dt_values[i] += rp.dt_values[i];
      if (want.grad)
        for (int d = 0; d < 2; ++d) res.grad_values[i][d] += rp.grad_values[i][d];
    }
    res.quad_error_estimate =
        std::max(res.quad_error_estimate, rp.quad_error_estimate);
    res.refinements_used = std::max(res.refinements_used, rp.refinements_used);
  }
  // engine convention carries k^(m/2) = k; this example's own prefactor is
  // k/(2 pi), so rescale.
  const double scale = 1.0 / (2.0 * pi);
  for (auto& v : res.values) v *= scale;
  for (auto& v : res.dt_values) v *= scale;
  for (auto& g : res.grad_values)
    for (int d = 0; d < 2; ++d) g[d] *= scale;
  res.quad_error_estimate *= scale;
  return res;
}

}  // namespace gbwave
