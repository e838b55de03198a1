#include "gbwave/superpose/engine.hpp"

#include <omp.h>

#include <algorithm>

namespace gbwave {

namespace {

constexpr std::size_t kNodeCap = 8'000'000;

template <int D>
struct NodeTable {
  static constexpr int NS = D * (D + 1) / 2;
  std::array<std::vector<double>, D> pos, mom;
  std::vector<cplx> S, M, A_eff;
  bool has_dt = false;
  std::array<std::vector<double>, D> dpos, dmom;
  std::vector<cplx> dS, dM, dA_eff;

  std::size_t size() const { return S.size(); }
  void reserve(std::size_t n, bool dt) {
    for (int d = 0; d < D; ++d) {
      pos[d].reserve(n);
      mom[d].reserve(n);
    }
    S.reserve(n);
    M.reserve(n * NS);
    A_eff.reserve(n);
    has_dt = dt;
    if (dt) {
      for (int d = 0; d < D; ++d) {
        dpos[d].reserve(n);
        dmom[d].reserve(n);
      }
      dS.reserve(n);
      dM.reserve(n * NS);
      dA_eff.reserve(n);
    }
  }
};

template <int D>
struct PanelMeta {
  std::size_t begin = 0, end = 0;
  Vec<D> lo{}, hi{};
  double reach2 = 0;
};

struct Mask2 {
  bool active = false;
  double lo[2] = {0, 0}, inv_cell[2] = {0, 0};
  int G = 0;
  std::vector<std::uint8_t> cells;

  bool occupied(const Vec<2>& x) const {
    int ix = static_cast<int>((x[0] - lo[0]) * inv_cell[0]);
    int iy = static_cast<int>((x[1] - lo[1]) * inv_cell[1]);
    ix = std::clamp(ix, 0, G - 1);
    iy = std::clamp(iy, 0, G - 1);
    return cells[static_cast<std::size_t>(iy) * G + ix] != 0;
  }
};

template <int D>
struct Level {
  NodeTable<D> nodes;
  std::vector<PanelMeta<D>> panels;
  Mask2 mask;  // only used for D == 2
};

template <int D>
BeamAt<D> beam_from_chart(const ChartPoint<D>& c) {
  BeamAt<D> b;
  b.x = c.x0;
  b.p = c.p0;
  b.S = c.S0;
  b.M = c.M0;
  b.A = c.A0;
  return b;
}

template <int D>
Level<D> build_level(const InitialManifold<D>& manifold, double t, double k,
                     const std::vector<int>& panels_per_axis, int order,
                     double abs_tol, bool need_dt,
                     std::span<const Vec<D>> targets) {
  const int m = manifold.dim_m;
  std::vector<CompositeAxis> axes(m);
  std::size_t total_nodes = 1, total_panels = 1;
  for (int a = 0; a < m; ++a) {
    axes[a] = CompositeAxis::build(manifold.axes[a].lo, manifold.axes[a].hi,
                                   panels_per_axis[a], order);
    total_panels *= static_cast<std::size_t>(panels_per_axis[a]);
    total_nodes *= axes[a].nodes.size();
  }
  if (total_nodes > kNodeCap)
    throw NonConverged(std::numeric_limits<double>::infinity());

  Level<D> L;
  L.nodes.reserve(total_nodes, need_dt);
  L.panels.reserve(total_panels);

  const bool use_evolved = static_cast<bool>(manifold.beam_at);
  if (need_dt && !use_evolved)
    throw ConfigError(
        "integrate_superposition: dt requested but the manifold carries no "
        "time-evolution closure");
  if (!use_evolved && t != 0.0)
    throw ConfigError(
        "integrate_superposition: t != 0 needs a time-evolution closure");

  auto eval_beam = [&](std::span<const double> z) -> BeamAt<D> {
    return use_evolved ? manifold.beam_at(z, t)
                       : beam_from_chart(manifold.chart(z));
  };

  std::array<double, 8> z{};
  std::array<int, 8> pidx{}, nidx{};
  const std::size_t nodes_per_panel = [&] {
    std::size_t q = 1;
    for (int a = 0; a < m; ++a) q *= static_cast<std::size_t>(order);
    return q;
  }();

  // per-panel scratch
  for (std::size_t pflat = 0; pflat < total_panels; ++pflat) {
    {
      std::size_t r = pflat;
      for (int a = m - 1; a >= 0; --a) {
        pidx[a] = static_cast<int>(r % panels_per_axis[a]);
        r /= panels_per_axis[a];
      }
    }
    PanelMeta<D> P;
    P.begin = L.nodes.size();
    Vec<D> lo, hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    double lam_min = std::numeric_limits<double>::infinity();
    double c_amp = 0;
    double ext_max = 0;

    for (std::size_t nflat = 0; nflat < nodes_per_panel; ++nflat) {
      {
        std::size_t r = nflat;
        for (int a = m - 1; a >= 0; --a) {
          nidx[a] = static_cast<int>(r % order);
          r /= order;
        }
      }
      double wq = 1.0;
      for (int a = 0; a < m; ++a) {
        const std::size_t ia =
            static_cast<std::size_t>(pidx[a]) * order + nidx[a];
        z[a] = axes[a].nodes[ia];
        wq *= axes[a].weights[ia];
      }
      const std::span<const double> zs(z.data(), static_cast<std::size_t>(m));
      BeamAt<D> b = eval_beam(zs);
      const double w = manifold.weight ? manifold.weight(zs) : 1.0;
      const cplx a_eff = b.A * (wq * w);
      const cplx da_eff = b.dA * (wq * w);

      bool finite = std::isfinite(w) && std::isfinite(std::abs(a_eff));
      for (int d = 0; d < D; ++d)
        finite = finite && std::isfinite(b.x[d]) && std::isfinite(b.p[d]);
      finite = finite && std::isfinite(std::abs(b.S));
      for (int c = 0; c < NodeTable<D>::NS; ++c)
        finite = finite && std::isfinite(std::abs(b.M.a[c]));
      if (manifold.check_nonzero_momentum && norm(b.p) == 0.0) finite = false;
      if (!finite)
        throw ChartFailure(std::vector<double>(z.begin(), z.begin() + m));

      for (int d = 0; d < D; ++d) {
        L.nodes.pos[d].push_back(b.x[d]);
        L.nodes.mom[d].push_back(b.p[d]);
        lo[d] = std::min(lo[d], b.x[d]);
        hi[d] = std::max(hi[d], b.x[d]);
      }
      L.nodes.S.push_back(b.S);
      for (int c = 0; c < NodeTable<D>::NS; ++c) L.nodes.M.push_back(b.M.a[c]);
      L.nodes.A_eff.push_back(a_eff);
      if (need_dt) {
        for (int d = 0; d < D; ++d) {
          L.nodes.dpos[d].push_back(b.dx[d]);
          L.nodes.dmom[d].push_back(b.dp[d]);
        }
        L.nodes.dS.push_back(b.dS);
        for (int c = 0; c < NodeTable<D>::NS; ++c)
          L.nodes.dM.push_back(b.dM.a[c]);
        L.nodes.dA_eff.push_back(da_eff);
      }
      lam_min = std::min(lam_min, min_imag_eig(b.M));
      c_amp = std::max({c_amp, std::abs(a_eff), std::abs(da_eff)});
    }

    // include the panel corners in the hull so it covers the whole panel
    const int ncorner = 1 << m;
    for (int cflat = 0; cflat < ncorner; ++cflat) {
      for (int a = 0; a < m; ++a) {
        const double w = (manifold.axes[a].hi - manifold.axes[a].lo) /
                         panels_per_axis[a];
        z[a] = manifold.axes[a].lo + (pidx[a] + ((cflat >> a) & 1)) * w;
      }
      const std::span<const double> zs(z.data(), static_cast<std::size_t>(m));
      BeamAt<D> b = eval_beam(zs);
      for (int d = 0; d < D; ++d) {
        lo[d] = std::min(lo[d], b.x[d]);
        hi[d] = std::max(hi[d], b.x[d]);
      }
    }
    for (int d = 0; d < D; ++d) ext_max = std::max(ext_max, hi[d] - lo[d]);
    const double inflate = 0.8 * ext_max / order + 1e-12;
    for (int d = 0; d < D; ++d) {
      lo[d] -= inflate;
      hi[d] += inflate;
    }
    P.lo = lo;
    P.hi = hi;

    if (lam_min <= 0)
      throw std::runtime_error(
          "integrate_superposition: Im M not positive definite at a node");
    // Cull radius: beyond it every node of the panel contributes less than a
    // 1e-4 fraction of abs_tol even after the k-sized dt/grad prefactors.
    if (c_amp == 0) {
      P.reach2 = 0;  // zero amplitude: panel never contributes
    } else {
      const double tau = abs_tol * 1e-4 /
                         std::max<double>(1.0, static_cast<double>(total_nodes));
      const double poly = (k + 10.0) * (k + 10.0) * (k + 10.0);
      const double lam_eff = 0.85 * lam_min;
      const double arg = std::max(1.0, c_amp * poly / tau);
      P.reach2 = 2.0 * std::log(arg) / (k * lam_eff);
    }
    P.end = L.nodes.size();
    L.panels.push_back(P);
  }

  // Occupancy mask over the target bounding box (2D only): cells farther than
  // reach from every panel box hold exact zeros and are skipped wholesale.
  if constexpr (D == 2) {
    if (targets.size() >= 4096) {
      Mask2& mk = L.mask;
      double tlo[2] = {std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
      double thi[2] = {-tlo[0], -tlo[1]};
      for (const auto& x : targets)
        for (int d = 0; d < 2; ++d) {
          tlo[d] = std::min(tlo[d], x[d]);
          thi[d] = std::max(thi[d], x[d]);
        }
      mk.G = 192;
      mk.cells.assign(static_cast<std::size_t>(mk.G) * mk.G, 0);
      for (int d = 0; d < 2; ++d) {
        const double span = std::max(thi[d] - tlo[d], 1e-12);
        mk.lo[d] = tlo[d];
        mk.inv_cell[d] = mk.G / span;
      }
      for (const auto& P : L.panels) {
        if (P.reach2 <= 0 && P.end == P.begin) continue;
        const double reach = std::sqrt(P.reach2);
        int c0[2], c1[2];
        bool any = true;
        for (int d = 0; d < 2; ++d) {
          c0[d] = static_cast<int>(
              std::floor((P.lo[d] - reach - mk.lo[d]) * mk.inv_cell[d]));
          c1[d] = static_cast<int>(
              std::floor((P.hi[d] + reach - mk.lo[d]) * mk.inv_cell[d]));
          c0[d] = std::clamp(c0[d], 0, mk.G - 1);
          c1[d] = std::clamp(c1[d], 0, mk.G - 1);
          if (P.hi[d] + reach < mk.lo[d] ||
              P.lo[d] - reach > mk.lo[d] + mk.G / mk.inv_cell[d])
            any = false;
        }
        if (!any) continue;
        for (int iy = c0[1]; iy <= c1[1]; ++iy)
          for (int ix = c0[0]; ix <= c1[0]; ++ix)
            mk.cells[static_cast<std::size_t>(iy) * mk.G + ix] = 1;
      }
      mk.active = true;
    }
  }
  return L;
}

/// Hot kernel: accumulate all panels for one target. Complex arithmetic is
/// hand-rolled on doubles; the summation is per-panel sequential feeding a
/// deterministic pairwise stack, so results do not depend on thread count.
template <int D, bool DT, bool GR>
void eval_target(const Level<D>& L, const Vec<D>& x, double k, bool cull,
                 double* out) {
  constexpr int NS = NodeTable<D>::NS;
  constexpr int W = 2 + (DT ? 2 : 0) + (GR ? 2 * D : 0);
  PairwiseStack<W> acc;
  const NodeTable<D>& N = L.nodes;

  for (const PanelMeta<D>& P : L.panels) {
    if (cull) {
      double d2 = 0;
      for (int d = 0; d < D; ++d) {
        double e = 0;
        if (x[d] < P.lo[d]) e = P.lo[d] - x[d];
        else if (x[d] > P.hi[d]) e = x[d] - P.hi[d];
        d2 += e * e;
      }
      if (d2 > P.reach2) continue;
    }
    std::array<double, W> lanes{};
    for (std::size_t i = P.begin; i < P.end; ++i) {
      double y[D], My_re[D], My_im[D];
      for (int d = 0; d < D; ++d) {
        y[d] = x[d] - N.pos[d][i];
        My_re[d] = 0;
        My_im[d] = 0;
      }
      const cplx* Mi = &N.M[i * NS];
      {
        int c = 0;
        for (int a = 0; a < D; ++a)
          for (int b = a; b < D; ++b, ++c) {
            const double mre = Mi[c].real(), mim = Mi[c].imag();
            My_re[a] += mre * y[b];
            My_im[a] += mim * y[b];
            if (b != a) {
              My_re[b] += mre * y[a];
              My_im[b] += mim * y[a];
            }
          }
      }
      double q_re = 0, q_im = 0, py = 0;
      for (int d = 0; d < D; ++d) {
        q_re += y[d] * My_re[d];
        q_im += y[d] * My_im[d];
        py += N.mom[d][i] * y[d];
      }
      const double ph_re = N.S[i].real() + py + 0.5 * q_re;
      const double ph_im = N.S[i].imag() + 0.5 * q_im;
      const double zre = -k * ph_im;
      if (zre < -746.0) continue;  // exp underflows to exactly zero
      const double zim = k * ph_re;
      const double ex = std::exp(zre);
      const double E_re = ex * std::cos(zim);
      const double E_im = ex * std::sin(zim);
      const double A_re = N.A_eff[i].real(), A_im = N.A_eff[i].imag();
      const double v_re = A_re * E_re - A_im * E_im;
      const double v_im = A_re * E_im + A_im * E_re;
      lanes[0] += v_re;
      lanes[1] += v_im;
      if constexpr (DT) {
        // dphi/dt = dS + dp.y - p.dx - dx.My + (1/2) y.dM y
        double dt_re = N.dS[i].real(), dt_im = N.dS[i].imag();
        const cplx* dMi = &N.dM[i * NS];
        {
          int c = 0;
          for (int a = 0; a < D; ++a)
            for (int b = a; b < D; ++b, ++c) {
              const double f = (a == b ? 0.5 : 1.0) * y[a] * y[b];
              dt_re += f * dMi[c].real();
              dt_im += f * dMi[c].imag();
            }
        }
        for (int d = 0; d < D; ++d) {
          const double dxd = N.dpos[d][i];
          dt_re += N.dmom[d][i] * y[d] - N.mom[d][i] * dxd - dxd * My_re[d];
          dt_im -= dxd * My_im[d];
        }
        // (i k dphi/dt) * v + dA_eff * E
        const double ik_re = -k * dt_im, ik_im = k * dt_re;
        const double dA_re = N.dA_eff[i].real(), dA_im = N.dA_eff[i].imag();
        lanes[2] += ik_re * v_re - ik_im * v_im + dA_re * E_re - dA_im * E_im;
        lanes[3] += ik_re * v_im + ik_im * v_re + dA_re * E_im + dA_im * E_re;
      }
      if constexpr (GR) {
        constexpr int base = DT ? 4 : 2;
        for (int d = 0; d < D; ++d) {
          // i k (p + My) * v
          const double g_re = -k * My_im[d];
          const double g_im = k * (N.mom[d][i] + My_re[d]);
          lanes[base + 2 * d] += g_re * v_re - g_im * v_im;
          lanes[base + 2 * d + 1] += g_re * v_im + g_im * v_re;
        }
      }
    }
    acc.push(lanes);
  }
  const auto tot = acc.total();
  for (int w = 0; w < W; ++w) out[w] = tot[w];
}

template <int D, bool DT, bool GR>
void eval_all(const Level<D>& L, std::span<const Vec<D>> targets, double k,
              double pref, ExecPolicy policy, SuperpositionResult<D>& R) {
  constexpr int W = 2 + (DT ? 2 : 0) + (GR ? 2 * D : 0);
  const bool cull = policy == ExecPolicy::parallel;
  const std::int64_t n = static_cast<std::int64_t>(targets.size());

  auto one = [&](std::int64_t i) {
    double out[W];
    if constexpr (D == 2) {
      if (cull && L.mask.active && !L.mask.occupied(targets[i])) {
        for (int w = 0; w < W; ++w) out[w] = 0;
      } else {
        eval_target<D, DT, GR>(L, targets[i], k, cull, out);
      }
    } else {
      eval_target<D, DT, GR>(L, targets[i], k, cull, out);
    }
    R.values[i] = pref * cplx(out[0], out[1]);
    if constexpr (DT) R.dt_values[i] = pref * cplx(out[2], out[3]);
    if constexpr (GR) {
      constexpr int base = DT ? 4 : 2;
      for (int d = 0; d < D; ++d)
        R.grad_values[i][d] = pref * cplx(out[base + 2 * d], out[base + 2 * d + 1]);
    }
  };

  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) one(i);
  }
}

}  // namespace

template <int D>
SuperpositionResult<D> integrate_superposition(
    const InitialManifold<D>& manifold, double t, double k,
    std::type_identity_t<std::span<const Vec<D>>> targets,
    const QuadratureSpec& quad, Want want,
    ExecPolicy policy) {
  quad.validate();
  if (!(k >= 1)) throw std::invalid_argument("integrate_superposition: k < 1");
  const int m = manifold.dim_m;
  if (m < 1 || m > 2 * D || static_cast<int>(manifold.axes.size()) != m)
    throw ConfigError("integrate_superposition: bad manifold dimensions");

  double xmax = 0;
  for (const auto& x : targets) xmax = std::max(xmax, norm(x));

  std::vector<int> base_panels = quad.panels_per_axis;
  if (base_panels.empty()) {
    if (!manifold.panel_hint)
      throw ConfigError(
          "integrate_superposition: no panels given and manifold has no hint");
    base_panels = manifold.panel_hint(k, xmax, quad.gauss_order);
  }
  if (static_cast<int>(base_panels.size()) != m)
    throw ConfigError("integrate_superposition: panels_per_axis size != m");

  const double pref = std::pow(k, 0.5 * m);
  const double kscale = std::max(1.0, k);

  auto run_level = [&](int level) {
    std::vector<int> panels = base_panels;
    for (auto& p : panels) p <<= level;
    Level<D> L = build_level<D>(manifold, t, k, panels, quad.gauss_order,
                                quad.abs_tol, want.dt, targets);
    SuperpositionResult<D> R;
    R.values.resize(targets.size());
    if (want.dt) R.dt_values.resize(targets.size());
    if (want.grad) R.grad_values.resize(targets.size());
    if (want.dt && want.grad)
      eval_all<D, true, true>(L, targets, k, pref, policy, R);
    else if (want.dt)
      eval_all<D, true, false>(L, targets, k, pref, policy, R);
    else if (want.grad)
      eval_all<D, false, true>(L, targets, k, pref, policy, R);
    else
      eval_all<D, false, false>(L, targets, k, pref, policy, R);
    return R;
  };

  SuperpositionResult<D> prev = run_level(0);
  if (quad.max_refinements == 0) return prev;  // trust mode, no estimate

  double diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= quad.max_refinements; ++level) {
    SuperpositionResult<D> fine = run_level(level);
    diff = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      diff = std::max(diff, std::abs(fine.values[i] - prev.values[i]));
      if (want.dt)
        diff = std::max(diff,
                        std::abs(fine.dt_values[i] - prev.dt_values[i]) / kscale);
      if (want.grad)
        for (int d = 0; d < D; ++d)
          diff = std::max(diff, std::abs(fine.grad_values[i][d] -
                                         prev.grad_values[i][d]) / kscale);
    }
    fine.quad_error_estimate = diff;
    fine.refinements_used = level;
    if (diff <= quad.abs_tol) return fine;
    prev = std::move(fine);
  }
  throw NonConverged(diff);
}

template SuperpositionResult<1> integrate_superposition<1>(
    const InitialManifold<1>&, double, double, std::type_identity_t<std::span<const Vec<1>>>,
    const QuadratureSpec&, Want, ExecPolicy);
template SuperpositionResult<2> integrate_superposition<2>(
    const InitialManifold<2>&, double, double, std::type_identity_t<std::span<const Vec<2>>>,
    const QuadratureSpec&, Want, ExecPolicy);
template SuperpositionResult<3> integrate_superposition<3>(
    const InitialManifold<3>&, double, double, std::type_identity_t<std::span<const Vec<3>>>,
    const QuadratureSpec&, Want, ExecPolicy);

}  // namespace gbwave
