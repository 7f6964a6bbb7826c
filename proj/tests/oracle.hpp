// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

// Small reference computations shared by the tests. Written directly on raw
// Eigen objects so they do not reuse library code paths.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
  return out;
}

inline Vec unit(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v(i) = 1.0;
  return v;
}

inline Vec gaussian_vec(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(n(rng), n(rng));
  return v;
}

inline Mat gaussian_mat(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

// Schmidt coefficients as square roots of the eigenvalues of M M†.
inline std::vector<double> schmidt_coefficients(const Vec& amps, int d1, int d2) {
  Mat m(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) m(i, j) = amps(i * d2 + j);
  Eigen::SelfAdjointEigenSolver<Mat> es(m * m.adjoint());
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Tr_2 of an operator on C^d1 ⊗ C^d2, by explicit index sums.
inline Mat trace_out_second(const Mat& rho, int d1, int d2) {
  Mat out = Mat::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += rho(i * d2 + k, j * d2 + k);
  return out;
}

inline double entropy_bits(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > 1e-15) s -= p * std::log2(p);
  return s;
}

}  // namespace oracle
