// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/hilbert.hpp"

#include "idpent/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace idpent {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
  if (!a.same_as(b)) {
    throw Error(ErrorCode::Dim, std::string(what) + ": operands live on different spaces");
  }
}

void require_normalized(const Ket& state, const char* what) {
  if (std::abs(state.norm() - 1.0) > kTolerance) {
    throw Error(ErrorCode::Norm, std::string(what) + ": state is not normalized (norm " +
                                     std::to_string(state.norm()) + ")");
  }
}

SpacePtr factor_space(const HilbertSpace& whole, int which, int d) {
  const auto& f = whole.factors();
  if (f.size() == 2 && f[which]->dim() == d) return f[which];
  return HilbertSpace::numbered(d);
}

SpacePtr two_qubits() {
  static const SpacePtr space = HilbertSpace::tensor(HilbertSpace::qubit(), HilbertSpace::qubit());
  return space;
}

}  // namespace

// ---------------------------------------------------------------------------
// HilbertSpace

HilbertSpace::HilbertSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::Dim, "HilbertSpace needs at least one basis label");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error(ErrorCode::Dim, "basis labels must be unique");
}

SpacePtr HilbertSpace::make(std::vector<std::string> labels) {
  return std::make_shared<const HilbertSpace>(std::move(labels));
}

SpacePtr HilbertSpace::numbered(int dim) {
  if (dim < 1) throw Error(ErrorCode::Dim, "dimension must be positive");
  std::vector<std::string> labels(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) labels[static_cast<size_t>(i)] = std::to_string(i);
  return make(std::move(labels));
}

SpacePtr HilbertSpace::tensor(const SpacePtr& left, const SpacePtr& right) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(left->dim() * right->dim()));
  for (const auto& a : left->labels())
    for (const auto& b : right->labels()) labels.push_back(a + ";" + b);
  auto space = std::make_shared<HilbertSpace>(std::move(labels));
  space->factors_ = {left, right};
  return space;
}

int HilbertSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::Range, "no basis label '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(SpacePtr space, Vector amplitudes) : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_->dim()) {
    throw Error(ErrorCode::Dim, "ket has " + std::to_string(amplitudes_.size()) +
                                    " amplitudes for a space of dimension " + std::to_string(space_->dim()));
  }
  if (!amplitudes_.allFinite()) throw Error(ErrorCode::Norm, "ket amplitudes must be finite");
}

Ket Ket::basis(const SpacePtr& space, int index) {
  if (index < 0 || index >= space->dim()) throw Error(ErrorCode::Range, "basis index out of range");
  Vector v = Vector::Zero(space->dim());
  v(index) = 1.0;
  return {space, std::move(v)};
}

Ket Ket::basis(const SpacePtr& space, std::string_view label) { return basis(space, space->index_of(label)); }

Ket Ket::zero(const SpacePtr& space) { return {space, Vector::Zero(space->dim())}; }

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorCode::Norm, "cannot normalize the zero vector");
  return {space_, amplitudes_ / n};
}

cplx Ket::inner(const Ket& other) const {
  require_same_space(*space_, other.space(), "inner");
  return amplitudes_.dot(other.amplitudes_);
}

Ket Ket::operator+(const Ket& other) const {
  require_same_space(*space_, other.space(), "ket sum");
  return {space_, amplitudes_ + other.amplitudes_};
}

Ket Ket::operator-(const Ket& other) const {
  require_same_space(*space_, other.space(), "ket difference");
  return {space_, amplitudes_ - other.amplitudes_};
}

Ket Ket::operator*(cplx scale) const { return {space_, amplitudes_ * scale}; }

// ---------------------------------------------------------------------------
// OperatorMatrix

OperatorMatrix::OperatorMatrix(SpacePtr space, Matrix entries) : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() != space_->dim()) {
    throw Error(ErrorCode::Dim, "operator matrix must be square with the space dimension");
  }
}

OperatorMatrix OperatorMatrix::identity(const SpacePtr& space) {
  return {space, Matrix::Identity(space->dim(), space->dim())};
}

OperatorMatrix OperatorMatrix::zero(const SpacePtr& space) { return {space, Matrix::Zero(space->dim(), space->dim())}; }

OperatorMatrix OperatorMatrix::outer(const Ket& ket, const Ket& bra) {
  require_same_space(ket.space(), bra.space(), "outer");
  return {ket.space_ptr(), ket.amplitudes() * bra.amplitudes().adjoint()};
}

bool OperatorMatrix::is_hermitian(double tol) const { return (entries_ - entries_.adjoint()).norm() <= tol; }

Ket OperatorMatrix::apply(const Ket& ket) const {
  require_same_space(*space_, ket.space(), "apply");
  return {space_, entries_ * ket.amplitudes()};
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& other) const {
  require_same_space(*space_, other.space(), "operator product");
  return {space_, entries_ * other.entries_};
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& other) const {
  require_same_space(*space_, other.space(), "operator sum");
  return {space_, entries_ + other.entries_};
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  require_same_space(*space_, other.space(), "operator difference");
  return {space_, entries_ - other.entries_};
}

// ---------------------------------------------------------------------------
// SchmidtForm

int SchmidtForm::rank(double tol) const {
  return static_cast<int>(std::count_if(coefficients.begin(), coefficients.end(), [&](double c) { return c > tol; }));
}

Ket SchmidtForm::reconstruct(const SpacePtr& product_space) const {
  Vector v = Vector::Zero(product_space->dim());
  for (size_t j = 0; j < coefficients.size(); ++j) {
    v += coefficients[j] * kron(left_vectors[j].amplitudes(), right_vectors[j].amplitudes());
  }
  return {product_space, std::move(v)};
}

// ---------------------------------------------------------------------------
// Free functions

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Ket tensor_ket(const Ket& left, const Ket& right) {
  return {HilbertSpace::tensor(left.space_ptr(), right.space_ptr()), kron(left.amplitudes(), right.amplitudes())};
}

OperatorMatrix tensor_op(const OperatorMatrix& left, const OperatorMatrix& right) {
  return {HilbertSpace::tensor(left.space_ptr(), right.space_ptr()), kron(left.entries(), right.entries())};
}

SchmidtForm schmidt_decompose(const Ket& state, int d1, int d2) {
  if (d1 < 1 || d2 < 1 || state.dim() != d1 * d2) {
    throw Error(ErrorCode::Dim, "state dimension does not factor as d1*d2");
  }
  require_normalized(state, "schmidt_decompose");

  // Row-major reshape: M(i, j) = <i;j|state>.
  Matrix m(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) m(i, j) = state.amplitudes()(i * d2 + j);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();  // already descending
  const SpacePtr left_space = factor_space(state.space(), 0, d1);
  const SpacePtr right_space = factor_space(state.space(), 1, d2);

  SchmidtForm form;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    form.coefficients.push_back(s(k));
    form.left_vectors.emplace_back(left_space, svd.matrixU().col(k));
    form.right_vectors.emplace_back(right_space, svd.matrixV().col(k).conjugate());
  }
  return form;
}

bool is_separable_pure(const Ket& state, int d1, int d2, double tol) {
  const SchmidtForm form = schmidt_decompose(state, d1, d2);
  return form.coefficients.size() < 2 || form.coefficients[1] <= tol;
}

OperatorMatrix partial_trace(const OperatorMatrix& rho, int d1, int d2, Keep keep) {
  if (d1 < 1 || d2 < 1 || rho.dim() != d1 * d2) throw Error(ErrorCode::Dim, "rho dimension does not factor as d1*d2");
  if (std::abs(rho.trace() - cplx(1.0)) > kTolerance) {
    throw Error(ErrorCode::Trace, "partial_trace expects a unit-trace density matrix");
  }
  if (!rho.is_hermitian()) throw Error(ErrorCode::Trace, "partial_trace expects a hermitian density matrix");

  const Matrix& r = rho.entries();
  if (keep == Keep::First) {
    Matrix out = Matrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int ip = 0; ip < d1; ++ip)
        for (int j = 0; j < d2; ++j) out(i, ip) += r(i * d2 + j, ip * d2 + j);
    return {factor_space(rho.space(), 0, d1), std::move(out)};
  }
  Matrix out = Matrix::Zero(d2, d2);
  for (int j = 0; j < d2; ++j)
    for (int jp = 0; jp < d2; ++jp)
      for (int i = 0; i < d1; ++i) out(j, jp) += r(i * d2 + j, i * d2 + jp);
  return {factor_space(rho.space(), 1, d2), std::move(out)};
}

double von_neumann_entropy(const OperatorMatrix& rho) {
  if (!rho.is_hermitian()) throw Error(ErrorCode::NotPsd, "density matrix is not hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > kTolerance) throw Error(ErrorCode::Trace, "density matrix trace is not 1");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.entries(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double p = eig.eigenvalues()(k);
    if (p < -kTolerance) {
      throw Error(ErrorCode::NotPsd, "density matrix has eigenvalue " + std::to_string(p));
    }
    if (p > kEigenvalueFloor) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

cplx expectation(const Ket& state, const OperatorMatrix& op) {
  if (state.dim() != op.dim()) throw Error(ErrorCode::Dim, "expectation: dimension mismatch");
  require_normalized(state, "expectation");
  return state.amplitudes().dot(op.entries() * state.amplitudes());
}

cplx mixed_expectation(std::span<const WeightedKet> decomposition, const OperatorMatrix& op) {
  double total = 0.0;
  for (const auto& term : decomposition) {
    if (term.weight < -kTolerance) throw Error(ErrorCode::Weights, "negative mixture weight");
    total += term.weight;
  }
  if (decomposition.empty() || std::abs(total - 1.0) > kTolerance) {
    throw Error(ErrorCode::Weights, "mixture weights must sum to 1");
  }
  cplx acc = 0.0;
  for (const auto& term : decomposition) acc += term.weight * expectation(term.ket, op);
  return acc;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix pauli(int k) {
  using namespace std::complex_literals;
  Matrix m(2, 2);
  switch (k) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -1i, 1i, 0.0; break;
    case 3: m << 1.0, 0.0, 0.0, -1.0; break;
    default: throw Error(ErrorCode::Range, "pauli index must be 0..3");
  }
  return m;
}

Ket bell_psi(int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = s / std::sqrt(2.0);
  return {two_qubits(), std::move(v)};
}

Ket bell_phi(int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  Vector v = Vector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = s / std::sqrt(2.0);
  return {two_qubits(), std::move(v)};
}

}  // namespace idpent
