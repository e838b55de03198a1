#include "gbwave/spectral/solver.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace gbwave {

namespace {

// FFTW plan handling: plans are made once per (K, direction) with
// FFTW_ESTIMATE and reused on caller-provided buffers via the new-array
// execute interface. fftw_malloc'd buffers keep alignment consistent.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf = nullptr;
};

PlanPair& plan_for(int K) {
  static std::map<int, PlanPair> plans;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = plans.find(K);
  if (it == plans.end()) {
    PlanPair p;
    p.buf = fftw_alloc_complex(static_cast<std::size_t>(K) * K);
    p.fwd = fftw_plan_dft_2d(K, K, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_2d(K, K, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    it = plans.emplace(K, p).first;
  }
  return it->second;
}

}  // namespace

std::vector<cplx> dft2d(const std::vector<cplx>& in, int K, bool inverse) {
  if (in.size() != static_cast<std::size_t>(K) * K)
    throw std::invalid_argument("dft2d: size mismatch");
  PlanPair& p = plan_for(K);
  std::memcpy(p.buf, in.data(), in.size() * sizeof(cplx));
  fftw_execute(inverse ? p.bwd : p.fwd);
  std::vector<cplx> out(in.size());
  std::memcpy(out.data(), p.buf, in.size() * sizeof(cplx));
  if (inverse) {
    const double s = 1.0 / (static_cast<double>(K) * K);
    for (auto& v : out) v *= s;
  }
  return out;
}

WaveState2D propagate(const WaveState2D& state0, double t) {
  const int K = state0.u.K;
  const double L = state0.u.L;
  if (state0.ut.K != K || state0.ut.L != L)
    throw std::invalid_argument("propagate: mismatched grids");

  std::vector<cplx> uh = dft2d(state0.u.values, K, false);
  std::vector<cplx> vh = dft2d(state0.ut.values, K, false);

  for (int iy = 0; iy < K; ++iy) {
    const double k2 = state0.u.kappa(iy);
    for (int ix = 0; ix < K; ++ix) {
      const double k1 = state0.u.kappa(ix);
      const std::size_t idx = static_cast<std::size_t>(iy) * K + ix;
      const double om = std::sqrt(k1 * k1 + k2 * k2);
      const cplx u0 = uh[idx], v0 = vh[idx];
      if (om == 0.0) {
        uh[idx] = u0 + v0 * t;
        vh[idx] = v0;
      } else {
        const double c = std::cos(om * t), s = std::sin(om * t);
        uh[idx] = u0 * c + v0 * (s / om);
        vh[idx] = -u0 * (om * s) + v0 * c;
      }
    }
  }

  WaveState2D out;
  out.t = state0.t + t;
  out.u = GridField2D(K, L);
  out.ut = GridField2D(K, L);
  out.u.values = dft2d(uh, K, true);
  out.ut.values = dft2d(vh, K, true);
  return out;
}

std::pair<GridField2D, GridField2D> spectral_gradient(const GridField2D& f) {
  const int K = f.K;
  std::vector<cplx> fh = dft2d(f.values, K, false);
  std::vector<cplx> gx(fh.size()), gy(fh.size());
  for (int iy = 0; iy < K; ++iy) {
    const double k2 = f.kappa(iy);
    for (int ix = 0; ix < K; ++ix) {
      const double k1 = f.kappa(ix);
      const std::size_t idx = static_cast<std::size_t>(iy) * K + ix;
      gx[idx] = iu * k1 * fh[idx];
      gy[idx] = iu * k2 * fh[idx];
    }
  }
  GridField2D fx(K, f.L), fy(K, f.L);
  fx.values = dft2d(gx, K, true);
  fy.values = dft2d(gy, K, true);
  return {std::move(fx), std::move(fy)};
}

double energy_of_state(const WaveState2D& state, double c) {
  if (c <= 0) throw std::invalid_argument("energy_of_state: c must be positive");
  auto [ux, uy] = spectral_gradient(state.u);
  const double h2 = state.u.h() * state.u.h();
  const double cinv2 = 1.0 / (c * c);
  PairwiseStack<1> acc;
  for (std::size_t i = 0; i < state.u.values.size(); ++i) {
    const double e = cinv2 * std::norm(state.ut.values[i]) +
                     std::norm(ux.values[i]) + std::norm(uy.values[i]);
    acc.push({e});
  }
  return std::sqrt(0.5 * h2 * acc.total()[0]);
}

bool resolution_ok(int K, double L, double k) {
  return static_cast<double>(K) >= 4.0 * k * L / (2.0 * pi);
}

void require_resolution(int K, double L, double k) {
  if (!resolution_ok(K, L, k))
    throw ResolutionTooLow("grid " + std::to_string(K) + " too coarse for k=" +
                           std::to_string(k) + " on L=" + std::to_string(L));
}

}  // namespace gbwave
