// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/random.hpp"

#include <Eigen/QR>

namespace idpent {

namespace {

Matrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

}  // namespace

Ket random_ket(const SpacePtr& space, std::mt19937_64& rng) {
  Matrix g = gaussian(space->dim(), 1, rng);
  Vector v = g.col(0);
  return Ket(space, v / v.norm());
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(dim, dim, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Matrix random_density(int dim, std::mt19937_64& rng) {
  const Matrix w = gaussian(dim, dim, rng);
  Matrix rho = w * w.adjoint();
  return rho / rho.trace();
}

}  // namespace idpent
