#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbwave {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iu{0.0, 1.0};

template <int D> using Vec = std::array<double, D>;
template <int D> using CVec = std::array<cplx, D>;

template <std::size_t N>
inline double dot(const std::array<double, N>& a,
                  const std::array<double, N>& b) {
  double s = 0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
inline double norm2(const std::array<double, N>& a) { return dot(a, a); }

template <std::size_t N>
inline double norm(const std::array<double, N>& a) { return std::sqrt(norm2(a)); }

template <std::size_t N>
inline std::array<double, N> sub(const std::array<double, N>& a,
                                 const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> add(const std::array<double, N>& a,
                                 const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> scale(double c, const std::array<double, N>& a) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = c * a[i];
  return r;
}

/// Complex symmetric DxD matrix, upper-triangle storage (row-major:
/// (0,0),(0,1),...,(0,D-1),(1,1),...). Symmetry is exact by construction.
template <int D>
struct SymC {
  static constexpr int N = D * (D + 1) / 2;
  std::array<cplx, N> a{};

  static constexpr int idx(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * D - i * (i - 1) / 2 + (j - i);
  }
  cplx operator()(int i, int j) const { return a[idx(i, j)]; }
  cplx& at(int i, int j) { return a[idx(i, j)]; }

  CVec<D> mul(const Vec<D>& y) const {
    CVec<D> r;
    for (int i = 0; i < D; ++i) {
      cplx s = 0;
      for (int j = 0; j < D; ++j) s += (*this)(i, j) * y[j];
      r[i] = s;
    }
    return r;
  }
  /// y . M y for real y.
  cplx quad(const Vec<D>& y) const {
    cplx s = 0;
    for (int i = 0; i < D; ++i) {
      s += (*this)(i, i) * y[i] * y[i];
      for (int j = i + 1; j < D; ++j) s += 2.0 * (*this)(i, j) * y[i] * y[j];
    }
    return s;
  }
  SymC<D>& operator+=(const SymC<D>& o) {
    for (int i = 0; i < N; ++i) a[i] += o.a[i];
    return *this;
  }
  friend SymC<D> operator*(cplx c, const SymC<D>& m) {
    SymC<D> r;
    for (int i = 0; i < N; ++i) r.a[i] = c * m.a[i];
    return r;
  }
  friend SymC<D> operator+(SymC<D> x, const SymC<D>& y) { return x += y; }

  static SymC<D> identity(cplx c = 1.0) {
    SymC<D> m;
    for (int i = 0; i < D; ++i) m.at(i, i) = c;
    return m;
  }
  /// c * v v^T
  static SymC<D> outer(cplx c, const Vec<D>& v) {
    SymC<D> m;
    for (int i = 0; i < D; ++i)
      for (int j = i; j < D; ++j) m.at(i, j) = c * v[i] * v[j];
    return m;
  }
};

/// Minimum eigenvalue of the (real symmetric) imaginary part of M.
double min_imag_eig(const SymC<1>& m);
double min_imag_eig(const SymC<2>& m);
double min_imag_eig(const SymC<3>& m);

/// Deterministic pairwise (binary-counter) accumulator for W doubles at once.
/// Summation order depends only on the push sequence, never on thread count.
template <int W>
class PairwiseStack {
 public:
  void push(const std::array<double, W>& v) {
    std::array<double, W> cur = v;
    std::size_t n = count_++;
    std::size_t lvl = 0;
    while (n & 1u) {
      for (int i = 0; i < W; ++i) cur[i] += slots_[lvl][i];
      n >>= 1;
      ++lvl;
    }
    if (lvl >= slots_.size()) slots_.push_back(cur);
    else slots_[lvl] = cur;
  }
  std::array<double, W> total() const {
    std::array<double, W> acc{};
    std::size_t n = count_;
    for (std::size_t lvl = 0; lvl < slots_.size(); ++lvl) {
      if (n & (std::size_t{1} << lvl))
        for (int i = 0; i < W; ++i) acc[i] += slots_[lvl][i];
    }
    return acc;
  }
  std::size_t count() const { return count_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::array<double, W>> slots_;
};

/// Composite quadrature failed to reach the requested tolerance.
struct NonConverged : std::runtime_error {
  double estimate;
  explicit NonConverged(double est)
      : std::runtime_error("quadrature did not converge, estimate " +
                           std::to_string(est)),
        estimate(est) {}
};

/// A manifold chart could not be evaluated at a node.
struct ChartFailure : std::runtime_error {
  std::vector<double> z;
  explicit ChartFailure(std::vector<double> at)
      : std::runtime_error("chart evaluation failed at a quadrature node"),
        z(std::move(at)) {}
};

/// Grid too coarse for the requested frequency.
struct ResolutionTooLow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gbwave
