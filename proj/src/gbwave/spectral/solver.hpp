#pragma once

#include "gbwave/spectral/grid.hpp"

namespace gbwave {

/// Exact-in-time Fourier-mode propagation of u_tt = Laplacian u on the
/// periodic box. Per mode: the zero mode evolves linearly, every other mode by
/// the cosine/sine formula with |kappa| = sqrt(kappa1^2 + kappa2^2).
/// Total: never fails on finite input.
WaveState2D propagate(const WaveState2D& state0, double t);

/// Inverse transform of (i kappa1 u_hat, i kappa2 u_hat).
std::pair<GridField2D, GridField2D> spectral_gradient(const GridField2D& f);

/// Unscaled energy norm (1/2 int c^-2 |u_t|^2 + |grad u|^2)^(1/2) with
/// spectral gradients and the h^2 grid sum (trapezoid on a periodic grid).
double energy_of_state(const WaveState2D& state, double c = 1.0);

/// Resolution guard: a frequency-k field needs K >= 4 k L / (2 pi), i.e. at
/// least 4 points per wavelength. Pipelines refuse to run below this bound.
bool resolution_ok(int K, double L, double k);
void require_resolution(int K, double L, double k);

/// Forward/backward 2D DFT (FFTW, unnormalized forward, 1/K^2 inverse).
/// Exposed for tests; plans use FFTW_ESTIMATE so results are reproducible.
std::vector<cplx> dft2d(const std::vector<cplx>& in, int K, bool inverse);

}  // namespace gbwave
