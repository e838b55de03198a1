#pragma once

#include <iosfwd>

#include "gbwave/common.hpp"

namespace gbwave {

/// Complex values on the uniform periodic grid [-L/2 : h : L/2-h]^2 with
/// h = L/K. Storage is row-major with x1 fastest: values[iy*K + ix] holds the
/// value at (x1(ix), x2(iy)). K must be a power of two.
struct GridField2D {
  int K = 0;
  double L = 0;
  std::vector<cplx> values;

  GridField2D() = default;
  GridField2D(int K_, double L_);

  double h() const { return L / K; }
  double coord(int i) const { return -0.5 * L + i * h(); }
  cplx& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * K + ix]; }
  cplx at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * K + ix]; }

  /// Fourier mode grid (2*pi/L) * {0, 1, ..., K/2-1, -K/2, ..., -1}.
  double kappa(int i) const {
    const int m = i < K / 2 ? i : i - K;
    return 2.0 * pi / L * m;
  }
};

/// Wave state (u, du/dt) on matching grids.
struct WaveState2D {
  GridField2D u;
  GridField2D ut;
  double t = 0;
};

/// Raw little-endian dump: u32 K, f64 L, f64 t, then K*K complex64
/// (float32 re, float32 im) in storage order. For offline inspection.
void write_field_dump(std::ostream& os, const GridField2D& f, double t);
GridField2D read_field_dump(std::istream& is, double* t_out = nullptr);

}  // namespace gbwave
