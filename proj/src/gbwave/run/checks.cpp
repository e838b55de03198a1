#include "gbwave/run/checks.hpp"

#include <random>

#include "gbwave/core/propagate.hpp"
#include "gbwave/examples/annulus.hpp"
#include "gbwave/examples/oracles7.hpp"
#include "gbwave/examples/radial3d.hpp"
#include "gbwave/examples/spherical.hpp"
#include "gbwave/metrics/norms.hpp"
#include "gbwave/spectral/solver.hpp"
#include "gbwave/superpose/manifold.hpp"

namespace gbwave {

namespace {

void add(CheckReport& rep, const std::string& name, double tol, double obs) {
  rep.checks.push_back({name, tol, obs, obs <= tol});
}

double sym_diff(const SymC<2>& a, const SymC<2>& b) {
  double m = 0;
  for (int i = 0; i < SymC<2>::N; ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

double sym_diff3(const SymC<3>& a, const SymC<3>& b) {
  double m = 0;
  for (int i = 0; i < SymC<3>::N; ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

CheckReport check_beam_core() {
  CheckReport rep{"beam-core", {}};
  const HamiltonianModel model{HamiltonianModel::Mode::plus, 1.0};

  {
    const PhaseSpacePoint<2> X0{{0, 0}, {1, 0}};
    const auto traj = propagate_ray(model, X0, 2.0, 1e-3);
    const auto& last = traj.back();
    add(rep, "straight ray endpoint", 1e-12,
        std::hypot(last.X.x[0] - 2.0, last.X.x[1]));
    double h_err = 0, s_err = 0;
    const double H0 = hamiltonian_eval(model, X0).H;
    for (const auto& p : traj) {
      h_err =
          std::max(h_err, std::abs(hamiltonian_eval(model, p.X).H - H0) / H0);
      s_err = std::max(s_err, std::abs(p.S));
    }
    add(rep, "H conservation (relative)", 1e-10, h_err);
    add(rep, "S stationarity", 1e-10, s_err);
  }

  // fold-family Riccati vs closed form: b(1, 0.5) = 1.5 + 0.5i
  {
    const double s = 0.5;
    const Vec<2> tau{0.0, -1.0}, n{1.0, 0.0};
    const PhaseSpacePoint<2> X0{{1.0, 1.0 - s}, tau};
    const auto traj = propagate_ray(model, X0, 1.0, 1e-3);
    SymC<2> M0 = SymC<2>::outer(iu, tau);
    M0 += SymC<2>::outer(annulus_b(0.0, s), n);
    const auto Ms = propagate_hessian(model, traj, M0);
    SymC<2> Mexp = SymC<2>::outer(iu, tau);
    Mexp += SymC<2>::outer(annulus_b(1.0, s), n);
    add(rep, "fold-family Riccati vs closed form", 1e-8,
        sym_diff(Ms.back(), Mexp));
    double min_eig = std::numeric_limits<double>::infinity();
    for (const auto& M : Ms) min_eig = std::min(min_eig, min_imag_eig(M));
    add(rep, "Im M stays positive (min eig > 1e-3)", 0.0,
        min_eig > 1e-3 ? 0.0 : 1.0);
  }

  // radial-family Riccati vs closed form: b(1, 1) = 0.6 - 0.8i
  {
    const double s = 1.0;
    const Vec<3> w{0.0, 0.0, 1.0};
    const PhaseSpacePoint<3> X0{{0.0, 0.0, s}, w};
    const auto traj = propagate_ray(model, X0, 1.0, 1e-3);
    SymC<3> M0 = SymC<3>::outer(-cplx(1.0 / s), w) +
                 SymC<3>::identity(cplx(1.0 / s) + iu);
    const auto Ms = propagate_hessian(model, traj, M0);
    const cplx b11 = radial3d_b(1.0, s);
    SymC<3> Mexp = SymC<3>::outer(-b11, w) + SymC<3>::identity(b11 + iu);
    add(rep, "radial-family Riccati vs closed form", 1e-8,
        sym_diff3(Ms.back(), Mexp));
  }
  return rep;
}

CheckReport check_quadrature() {
  CheckReport rep{"quadrature", {}};
  {
    const auto& r2 = gauss_legendre_nodes(2);
    add(rep, "order-2 nodes", 1e-14,
        std::abs(r2.nodes[1] - 1.0 / std::sqrt(3.0)));
    const auto& r5 = gauss_legendre_nodes(5);
    double I = 0;
    for (int i = 0; i < 5; ++i) I += r5.weights[i] * std::pow(r5.nodes[i], 8);
    add(rep, "order-5 degree-8 exactness", 1e-14, std::abs(I - 2.0 / 9.0));
    const auto& r20 = gauss_legendre_nodes(20);
    double w = 0;
    for (double x : r20.weights) w += x;
    add(rep, "weights sum to 2", 1e-14, std::abs(w - 2.0));
  }
  {
    // quadratic-phase oracle at the origin, k = 4, d = 1
    const auto man = manifold_e5_gaussian_1d();
    const Vec<1> x0{0.0};
    QuadratureSpec q;
    q.abs_tol = 1e-9;
    q.max_refinements = 3;
    const auto r = integrate_superposition(man, 0.0, 4.0,
                                           std::span<const Vec<1>>(&x0, 1), q,
                                           Want{true, false, false});
    const auto oracle = closed_form_superposition_oracle(
        OracleId::e5_gaussian, std::span<const double>(&x0[0], 1), 4.0, 1, 1);
    add(rep, "static superposition vs closed form (relative)", 1e-6,
        std::abs(r.values[0] - oracle.value) / std::abs(oracle.value));
  }
  return rep;
}

CheckReport check_spectral() {
  CheckReport rep{"spectral", {}};
  const int K = 64;
  const double L = 4.0;
  {
    WaveState2D s0;
    s0.u = GridField2D(K, L);
    s0.ut = GridField2D(K, L);
    for (int iy = 0; iy < K; ++iy)
      for (int ix = 0; ix < K; ++ix)
        s0.u.at(ix, iy) = std::exp(iu * (0.5 * pi) * s0.u.coord(ix));
    const WaveState2D s1 = propagate(s0, 1.0);
    double m = 0;
    for (const auto& v : s1.u.values) m = std::max(m, std::abs(v));
    add(rep, "single mode at quarter period", 1e-12, m);
  }
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    WaveState2D s0;
    s0.u = GridField2D(K, L);
    s0.ut = GridField2D(K, L);
    // band-limited random data
    std::vector<cplx> uh(s0.u.values.size()), vh(uh.size());
    for (int iy = 0; iy < K; ++iy)
      for (int ix = 0; ix < K; ++ix) {
        const bool keep = (ix < K / 4 || ix > 3 * K / 4) &&
                          (iy < K / 4 || iy > 3 * K / 4);
        const std::size_t idx = static_cast<std::size_t>(iy) * K + ix;
        uh[idx] = keep ? cplx(U(rng), U(rng)) : 0.0;
        vh[idx] = keep ? cplx(U(rng), U(rng)) : 0.0;
      }
    s0.u.values = dft2d(uh, K, true);
    s0.ut.values = dft2d(vh, K, true);
    const double e0 = energy_of_state(s0);
    const WaveState2D s1 = propagate(s0, 0.3);
    const WaveState2D s2 = propagate(s0, 0.8);
    add(rep, "energy conservation (relative, t=0.3)", 1e-10,
        std::abs(energy_of_state(s1) - e0) / e0);
    add(rep, "energy conservation (relative, t=0.8)", 1e-10,
        std::abs(energy_of_state(s2) - e0) / e0);
    const WaveState2D back = propagate(s1, -0.3);
    double m = 0;
    for (std::size_t i = 0; i < back.u.values.size(); ++i)
      m = std::max(m, std::abs(back.u.values[i] - s0.u.values[i]));
    add(rep, "time reversibility", 1e-12, m);
  }
  return rep;
}

CheckReport check_examples() {
  CheckReport rep{"examples", {}};
  {
    // concentrated-data identity at t = 0
    SphericalExample ex{40.0};
    QuadratureSpec q;
    q.abs_tol = 1e-9;
    q.max_refinements = 4;
    double worst = 0;
    for (double r = 0.0; r <= 2.0; r += 0.25) {
      const PointEval gb = spherical_superposition_at(r, 0.0, ex, q);
      const PointEval exa = spherical_exact(r, 0.0, ex.k);
      worst = std::max(worst, std::abs(gb.u - exa.u));
    }
    add(rep, "spherical initial-data identity", 1e-7, worst);
  }
  {
    AnnulusExample ex;
    ex.k = 20;
    double worst = 0, worst_dt = 0;
    for (double theta : {0.0, 1.1, 4.0})
      for (double s : {0.3, 0.5, 0.7})
        for (double t : {0.0, 0.35, 0.8}) {
          const auto [phase, amp] = annulus_beam(theta, s, t, ex);
          worst = std::max(worst,
                           std::abs(phase.phase_at(phase.gamma) - (-theta + s)));
          // dphi/dt on the central ray via the evolution closure
          const auto man = manifold_annulus(ex);
          const double z[2] = {theta, s};
          const auto b = man.beam_at(std::span<const double>(z, 2), t);
          const cplx dphi = b.dS - cplx(dot(b.p, b.dx));
          worst_dt = std::max(worst_dt, std::abs(dphi - cplx(-1.0)));
        }
    add(rep, "central-ray phase equals -theta + s", 1e-12, worst);
    add(rep, "central-ray dphi/dt equals -1", 1e-10, worst_dt);
  }
  {
    Radial3dExample ex;
    ex.k = 100;
    double worst = 0;
    for (double s : {0.2, 0.5, 0.9}) {
      const cplx b0 = radial3d_b(0.0, s);
      worst = std::max(worst, std::abs(b0 - cplx(1.0 / s)));
    }
    add(rep, "radial Hessian initial value b(0,s) = 1/s", 1e-14, worst);
  }
  {
    // quadratic-phase magnitude law at a sample point
    const auto man = manifold_e4_wkb_1d();
    const Vec<1> x0{0.7};
    QuadratureSpec q;
    q.abs_tol = 1e-9;
    q.max_refinements = 3;
    const double k = 12.0;
    const auto r = integrate_superposition(man, 0.0, k,
                                           std::span<const Vec<1>>(&x0, 1), q,
                                           Want{true, false, false});
    const auto oracle = closed_form_superposition_oracle(
        OracleId::e4_wkb, std::span<const double>(&x0[0], 1), k, 1, 1);
    add(rep, "wkb quadratic-phase value vs closed form (relative)", 1e-6,
        std::abs(r.values[0] - oracle.value) / std::abs(oracle.value));
  }
  return rep;
}

}  // namespace

CheckReport verify(const std::string& suite) {
  if (suite == "beam-core") return check_beam_core();
  if (suite == "quadrature") return check_quadrature();
  if (suite == "spectral") return check_spectral();
  if (suite == "examples") return check_examples();
  if (suite == "all") {
    CheckReport all{"all", {}};
    for (const auto& s : verify_suites()) {
      if (s == "all") continue;
      const CheckReport r = verify(s);
      for (const auto& c : r.checks)
        all.checks.push_back({s + ": " + c.name, c.tolerance, c.observed, c.pass});
    }
    return all;
  }
  throw ConfigError("unknown verify suite: " + suite);
}

std::vector<std::string> verify_suites() {
  return {"beam-core", "quadrature", "spectral", "examples", "all"};
}

}  // namespace gbwave
