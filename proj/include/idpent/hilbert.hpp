// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hilbert.hpp
 * @brief Finite-dimensional complex Hilbert spaces, kets and dense operators.
 *
 * Tensor products use the left factor as the major index (row-major
 * Kronecker), so |i>⊗|j> sits at position i*d2 + j.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idpent {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Default tolerance for equality assertions.
inline constexpr double kTolerance = 1e-9;
/// Eigenvalues below this are dropped from entropy sums.
inline constexpr double kEigenvalueFloor = 1e-12;

class HilbertSpace;
using SpacePtr = std::shared_ptr<const HilbertSpace>;

/// Space with an ordered, labelled orthonormal basis.
class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<std::string> labels);

  static SpacePtr make(std::vector<std::string> labels);
  /// Basis labelled "0", "1", ..., "dim-1".
  static SpacePtr numbered(int dim);
  static SpacePtr qubit() { return numbered(2); }
  /// Product space; labels joined as "a;b". Remembers both factors.
  static SpacePtr tensor(const SpacePtr& left, const SpacePtr& right);

  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int index_of(std::string_view label) const;

  /// Factors of a product space, empty for a primitive space.
  const std::vector<SpacePtr>& factors() const noexcept { return factors_; }

  bool same_as(const HilbertSpace& other) const noexcept {
    return this == &other || labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<SpacePtr> factors_;
};

class Ket {
 public:
  Ket(SpacePtr space, Vector amplitudes);

  static Ket basis(const SpacePtr& space, int index);
  static Ket basis(const SpacePtr& space, std::string_view label);
  static Ket zero(const SpacePtr& space);

  const HilbertSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }

  double norm() const { return amplitudes_.norm(); }
  Ket normalized() const;
  /// <this|other>
  cplx inner(const Ket& other) const;

  Ket operator+(const Ket& other) const;
  Ket operator-(const Ket& other) const;
  Ket operator*(cplx scale) const;
  friend Ket operator*(cplx scale, const Ket& ket) { return ket * scale; }

 private:
  SpacePtr space_;
  Vector amplitudes_;
};

class OperatorMatrix {
 public:
  OperatorMatrix(SpacePtr space, Matrix entries);

  static OperatorMatrix identity(const SpacePtr& space);
  static OperatorMatrix zero(const SpacePtr& space);
  /// |ket><ket|; the ket is not normalized first.
  static OperatorMatrix outer(const Ket& ket, const Ket& bra);
  static OperatorMatrix projector(const Ket& ket) { return outer(ket, ket); }

  const HilbertSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const Matrix& entries() const noexcept { return entries_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }

  OperatorMatrix adjoint() const { return {space_, entries_.adjoint()}; }
  bool is_hermitian(double tol = kTolerance) const;
  cplx trace() const { return entries_.trace(); }
  Ket apply(const Ket& ket) const;

  OperatorMatrix operator*(const OperatorMatrix& other) const;
  OperatorMatrix operator+(const OperatorMatrix& other) const;
  OperatorMatrix operator-(const OperatorMatrix& other) const;
  OperatorMatrix operator*(cplx scale) const { return {space_, entries_ * scale}; }
  friend OperatorMatrix operator*(cplx scale, const OperatorMatrix& op) { return op * scale; }

 private:
  SpacePtr space_;
  Matrix entries_;
};

struct SchmidtForm {
  std::vector<double> coefficients;  // descending
  std::vector<Ket> left_vectors;
  std::vector<Ket> right_vectors;

  int rank(double tol = kTolerance) const;
  /// Σ λ_j |left_j> ⊗ |right_j> on the given product space.
  Ket reconstruct(const SpacePtr& product_space) const;
};

struct WeightedKet {
  double weight;
  Ket ket;
};

enum class Keep { First, Second };

Ket tensor_ket(const Ket& left, const Ket& right);
OperatorMatrix tensor_op(const OperatorMatrix& left, const OperatorMatrix& right);

SchmidtForm schmidt_decompose(const Ket& state, int d1, int d2);
bool is_separable_pure(const Ket& state, int d1, int d2, double tol = kTolerance);

OperatorMatrix partial_trace(const OperatorMatrix& rho, int d1, int d2, Keep keep);

/// Entropy in bits.
double von_neumann_entropy(const OperatorMatrix& rho);

cplx expectation(const Ket& state, const OperatorMatrix& op);
cplx mixed_expectation(std::span<const WeightedKet> decomposition, const OperatorMatrix& op);

// Matrix helpers shared across modules.

/// Largest singular value.
double operator_norm(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Pauli matrix σ_k for k = 0 (identity), 1, 2, 3.
Matrix pauli(int k);

// Bell states on C^2 ⊗ C^2 built from the computational basis.
Ket bell_psi(int sign);
Ket bell_phi(int sign);

}  // namespace idpent
