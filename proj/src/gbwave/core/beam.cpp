#include "gbwave/core/beam.hpp"

#include <Eigen/Dense>

namespace gbwave {

double min_imag_eig(const SymC<1>& m) { return m(0, 0).imag(); }

double min_imag_eig(const SymC<2>& m) {
  const double a = m(0, 0).imag(), b = m(0, 1).imag(), c = m(1, 1).imag();
  const double mid = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return mid - rad;
}

double min_imag_eig(const SymC<3>& m) {
  Eigen::Matrix3d im;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) im(i, j) = m(i, j).imag();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(im, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace gbwave
