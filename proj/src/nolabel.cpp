// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/nolabel.hpp"

#include "idpent/error.hpp"

#include <cmath>

namespace idpent {

namespace {

void require_same_eta(Exchange a, Exchange b) {
  if (a != b) throw Error(ErrorCode::Eta, "bosonic and fermionic pairs cannot be combined");
}

void require_unit(const Ket& k, const char* what) {
  if (std::abs(k.norm() - 1.0) > kTolerance) {
    throw Error(ErrorCode::Norm, std::string(what) + ": closed forms need unit constituents");
  }
}

void require_not_null(const NoLabelState& s, const char* what) {
  if (s.is_null()) throw Error(ErrorCode::NullState, std::string(what) + ": state has zero norm");
}

bool close(const Ket& a, const Ket& b) { return (a.amplitudes() - b.amplitudes()).norm() <= kMergeTolerance; }

cplx sandwich(const Ket& bra, const OperatorMatrix& op, const Ket& ket) { return bra.inner(op.apply(ket)); }

}  // namespace

// ---------------------------------------------------------------------------
// NoLabelPair / NoLabelState

NoLabelPair::NoLabelPair(Ket phi1, Ket phi2, Exchange eta) : phi1_(std::move(phi1)), phi2_(std::move(phi2)), eta_(eta) {
  if (!phi1_.space().same_as(phi2_.space())) throw Error(ErrorCode::Dim, "pair constituents live on different spaces");
}

double NoLabelPair::squared_norm() const { return nl_inner(*this, *this).real(); }

NoLabelState::NoLabelState(SpacePtr space, Exchange eta) : space_(std::move(space)), eta_(eta) {}

NoLabelState::NoLabelState(const NoLabelPair& pair, cplx coefficient) : space_(pair.space_ptr()), eta_(pair.eta()) {
  terms_.push_back({coefficient, pair});
}

void NoLabelState::add(cplx coefficient, const NoLabelPair& pair) {
  require_same_eta(eta_, pair.eta());
  if (!space_->same_as(pair.phi1().space())) throw Error(ErrorCode::Dim, "pair lives on a different space");
  terms_.push_back({coefficient, pair});
}

double NoLabelState::squared_norm() const { return nl_inner(*this, *this).real(); }

NoLabelState NoLabelState::normalized() const {
  require_not_null(*this, "normalized");
  return *this * (1.0 / std::sqrt(squared_norm()));
}

NoLabelState NoLabelState::canonicalized() const {
  const double eta = eta_value(eta_);
  NoLabelState out(space_, eta_);
  for (const auto& t : terms_) {
    bool merged = false;
    for (auto& u : out.terms_) {
      if (close(t.pair.phi1(), u.pair.phi1()) && close(t.pair.phi2(), u.pair.phi2())) {
        u.coefficient += t.coefficient;
        merged = true;
      } else if (close(t.pair.phi1(), u.pair.phi2()) && close(t.pair.phi2(), u.pair.phi1())) {
        u.coefficient += eta * t.coefficient;
        merged = true;
      }
      if (merged) break;
    }
    if (!merged) out.terms_.push_back(t);
  }
  std::erase_if(out.terms_, [](const NoLabelTerm& t) { return std::abs(t.coefficient) <= kMergeTolerance; });
  return out;
}

NoLabelState NoLabelState::operator+(const NoLabelState& other) const {
  require_same_eta(eta_, other.eta_);
  NoLabelState out = *this;
  for (const auto& t : other.terms_) out.add(t.coefficient, t.pair);
  return out;
}

NoLabelState NoLabelState::operator*(cplx scale) const {
  NoLabelState out = *this;
  for (auto& t : out.terms_) t.coefficient *= scale;
  return out;
}

// ---------------------------------------------------------------------------
// Scalar product and first quantization

cplx nl_inner(const NoLabelPair& a, const NoLabelPair& b) {
  require_same_eta(a.eta(), b.eta());
  return a.phi1().inner(b.phi1()) * a.phi2().inner(b.phi2()) +
         eta_value(a.eta()) * a.phi1().inner(b.phi2()) * a.phi2().inner(b.phi1());
}

cplx nl_inner(const NoLabelState& a, const NoLabelState& b) {
  require_same_eta(a.eta(), b.eta());
  cplx acc = 0.0;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc += std::conj(s.coefficient) * t.coefficient * nl_inner(s.pair, t.pair);
  return acc;
}

Ket to_first_quantized(const NoLabelPair& pair) {
  const Ket direct = tensor_ket(pair.phi1(), pair.phi2());
  const Ket exchanged = tensor_ket(pair.phi2(), pair.phi1());
  return (direct + exchanged * eta_value(pair.eta())) * (1.0 / std::sqrt(2.0));
}

Ket to_first_quantized(const NoLabelState& state) {
  const SpacePtr product = HilbertSpace::tensor(state.space_ptr(), state.space_ptr());
  Ket out = Ket::zero(product);
  for (const auto& t : state.terms()) out = out + to_first_quantized(t.pair) * t.coefficient;
  return out;
}

OperatorMatrix extended_operator_matrix(const OperatorMatrix& op) {
  const OperatorMatrix id = OperatorMatrix::identity(op.space_ptr());
  return tensor_op(op, id) + tensor_op(id, op);
}

NoLabelState extend_one_particle_op(const OperatorMatrix& op, const NoLabelState& state) {
  NoLabelState out(state.space_ptr(), state.eta());
  for (const auto& t : state.terms()) {
    out.add(t.coefficient, NoLabelPair(op.apply(t.pair.phi1()), t.pair.phi2(), t.pair.eta()));
    out.add(t.coefficient, NoLabelPair(t.pair.phi1(), op.apply(t.pair.phi2()), t.pair.eta()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction

Ket reduce(const Ket& psi, const NoLabelState& state) {
  if (std::abs(psi.norm() - 1.0) > kTolerance) throw Error(ErrorCode::Norm, "reduce: probe state must be normalized");
  const double eta = eta_value(state.eta());
  Ket out = Ket::zero(state.space_ptr());
  for (const auto& t : state.terms()) {
    const Ket& a = t.pair.phi1();
    const Ket& b = t.pair.phi2();
    out = out + (b * psi.inner(a) + a * (eta * psi.inner(b))) * t.coefficient;
  }
  return out;
}

OperatorMatrix projector_onto(std::span<const Ket> basis) {
  if (basis.empty()) throw Error(ErrorCode::Dim, "subspace basis is empty");
  OperatorMatrix p = OperatorMatrix::zero(basis.front().space_ptr());
  for (const Ket& k : basis) p = p + OperatorMatrix::projector(k);
  return p;
}

ReducedDM k_reduced_dm(const NoLabelState& state, std::span<const Ket> k_basis) {
  if (k_basis.empty()) throw Error(ErrorCode::Dim, "subspace basis is empty");
  for (size_t i = 0; i < k_basis.size(); ++i) {
    for (size_t j = 0; j < k_basis.size(); ++j) {
      const cplx g = k_basis[i].inner(k_basis[j]);
      if (std::abs(g - cplx(i == j ? 1.0 : 0.0)) > kTolerance) {
        throw Error(ErrorCode::Norm, "subspace basis is not orthonormal");
      }
    }
  }
  require_not_null(state, "k_reduced_dm");
  const NoLabelState phi = state.normalized();

  const int d = phi.space_ptr()->dim();
  Matrix m = Matrix::Zero(d, d);
  for (const Ket& psi : k_basis) {
    const Vector v = reduce(psi, phi).amplitudes();
    m += v * v.adjoint();
  }
  const double nk = 0.5 * m.trace().real();
  if (nk <= kNullThreshold) {
    throw Error(ErrorCode::NullReduction, "projection onto the subspace annihilates the state");
  }
  return {OperatorMatrix(phi.space_ptr(), m / (2.0 * nk)), projector_onto(k_basis), nk};
}

ReducedDM k_reduced_dm_closed_form(const NoLabelPair& pair, const OperatorMatrix& p) {
  if (pair.is_null()) throw Error(ErrorCode::NullState, "k_reduced_dm_closed_form: null pair");
  const double eta = eta_value(pair.eta());
  const Ket& a = pair.phi1();
  const Ket& b = pair.phi2();
  const cplx paa = sandwich(a, p, a);
  const cplx pbb = sandwich(b, p, b);
  const cplx pab = sandwich(a, p, b);
  const cplx pba = sandwich(b, p, a);

  const Matrix va = a.amplitudes();
  const Matrix vb = b.amplitudes();
  const Matrix numerator = pbb * va * va.adjoint() + paa * vb * vb.adjoint() +
                           eta * (pab * va * vb.adjoint() + pba * vb * va.adjoint());
  // Half the summed reduction norms of the unnormalized pair.
  const double nk_pair = 0.5 * (paa.real() * b.inner(b).real() + pbb.real() * a.inner(a).real()) +
                         eta * (pab * b.inner(a)).real();
  if (nk_pair <= kNullThreshold) throw Error(ErrorCode::NullReduction, "projection annihilates the pair");
  return {OperatorMatrix(a.space_ptr(), numerator / (2.0 * nk_pair)), p, nk_pair / pair.squared_norm()};
}

OperatorMatrix full_reduced_dm_closed_form(const NoLabelPair& pair) {
  require_unit(pair.phi1(), "full_reduced_dm_closed_form");
  require_unit(pair.phi2(), "full_reduced_dm_closed_form");
  if (pair.is_null()) throw Error(ErrorCode::NullState, "full_reduced_dm_closed_form: null pair");
  const double eta = eta_value(pair.eta());
  const Matrix va = pair.phi1().amplitudes();
  const Matrix vb = pair.phi2().amplitudes();
  const cplx ab = pair.phi1().inner(pair.phi2());
  const Matrix numerator =
      va * va.adjoint() + vb * vb.adjoint() + eta * (ab * va * vb.adjoint() + std::conj(ab) * vb * va.adjoint());
  return {pair.space_ptr(), numerator / (2.0 * (1.0 + eta * std::norm(ab)))};
}

double entanglement_entropy(const NoLabelState& state, std::span<const Ket> k_basis) {
  return von_neumann_entropy(k_reduced_dm(state, k_basis).matrix);
}

// ---------------------------------------------------------------------------
// Expectations

double expectation_extended(const NoLabelState& state, const OperatorMatrix& op) {
  require_not_null(state, "expectation_extended");
  return (nl_inner(state, extend_one_particle_op(op, state)) / state.squared_norm()).real();
}

double expectation_extended_closed_form(const NoLabelPair& pair, const OperatorMatrix& op) {
  require_unit(pair.phi1(), "expectation_extended_closed_form");
  require_unit(pair.phi2(), "expectation_extended_closed_form");
  if (pair.is_null()) throw Error(ErrorCode::NullState, "expectation_extended_closed_form: null pair");
  const Ket& a = pair.phi1();
  const Ket& b = pair.phi2();
  const double eta = eta_value(pair.eta());
  const double sum = sandwich(a, op, a).real() + sandwich(b, op, b).real() +
                     2.0 * eta * (sandwich(b, op, a) * a.inner(b)).real();
  return sum / pair.squared_norm();
}

double expectation_reduced(const ReducedDM& reduced, const OperatorMatrix& op) {
  return (reduced.matrix * op).trace().real();
}

double expectation_reduced_closed_form(const NoLabelPair& pair, const OperatorMatrix& op, const OperatorMatrix& p) {
  require_unit(pair.phi1(), "expectation_reduced_closed_form");
  require_unit(pair.phi2(), "expectation_reduced_closed_form");
  const Ket& a = pair.phi1();
  const Ket& b = pair.phi2();
  const double eta = eta_value(pair.eta());
  const double nk_pair = 0.5 * sandwich(a, p, a).real() + 0.5 * sandwich(b, p, b).real() +
                         eta * (sandwich(a, p, b) * b.inner(a)).real();
  if (nk_pair <= kNullThreshold) throw Error(ErrorCode::NullReduction, "projection annihilates the pair");
  const double numerator = (sandwich(a, op, a) * sandwich(b, p, b)).real() +
                           (sandwich(a, p, a) * sandwich(b, op, b)).real() +
                           2.0 * eta * (sandwich(b, op, a) * sandwich(a, p, b)).real();
  return numerator / (2.0 * nk_pair);
}

PairExpectation extended_pair_expectation(const NoLabelState& state, const OperatorMatrix& o1,
                                          const OperatorMatrix& o2) {
  if (operator_norm(commutator(o1.entries(), o2.entries())) > kTolerance) {
    throw Error(ErrorCode::NonCommuting, "extended_pair_expectation needs [O1, O2] = 0");
  }
  require_not_null(state, "extended_pair_expectation");
  const double n = state.squared_norm();
  const NoLabelState o2s = extend_one_particle_op(o2, state);
  const NoLabelState o1o2s = extend_one_particle_op(o1, o2s);
  PairExpectation out{};
  out.joint = (nl_inner(state, o1o2s) / n).real();
  out.first = expectation_extended(state, o1);
  out.second = expectation_extended(state, o2);
  out.product = out.first * out.second;
  return out;
}

FactorizationSides factorization_identity_sides(const NoLabelPair& pair, const OperatorMatrix& o1,
                                                const OperatorMatrix& o2) {
  const Ket& a = pair.phi1();
  const Ket& b = pair.phi2();
  require_unit(a, "factorization_identity_sides");
  require_unit(b, "factorization_identity_sides");
  if (std::abs(a.inner(b)) > kTolerance) throw Error(ErrorCode::Norm, "constituents must be orthogonal");
  if (operator_norm(commutator(o1.entries(), o2.entries())) > kTolerance) {
    throw Error(ErrorCode::NonCommuting, "factorization identity needs [O1, O2] = 0");
  }
  const double eta = eta_value(pair.eta());
  const OperatorMatrix o12 = o1 * o2;
  const double lhs = sandwich(a, o12, a).real() + sandwich(b, o12, b).real() +
                     2.0 * eta * (sandwich(a, o1, b) * sandwich(b, o2, a)).real();
  const double rhs = (sandwich(a, o1, a) * sandwich(a, o2, a)).real() + (sandwich(b, o2, b) * sandwich(b, o1, b)).real();
  return {lhs, rhs};
}

}  // namespace idpent
