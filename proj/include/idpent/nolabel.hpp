// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file nolabel.hpp
 * @brief Two-particle states built from unlabelled pairs |φ1, φ2>.
 *
 * Pairs carry an exchange sign η (+1 bosons, −1 fermions) and the scalar
 * product
 *
 *   <φ1,φ2|φ1',φ2'> = <φ1|φ1'><φ2|φ2'> + η <φ1|φ2'><φ2|φ1'>,
 *
 * so that |φ1,φ2> = η |φ2,φ1>. A pair corresponds to the unnormalized
 * first-quantized vector (φ1⊗φ2 + η φ2⊗φ1)/√2.
 *
 * Single-particle operators act through the extension
 * A⁽¹⁾|φ1,φ2> = |Aφ1,φ2> + |φ1,Aφ2>, without a 1/2. Expectations of A⁽¹⁾
 * therefore count both particles and differ by a factor 2 from traces against
 * the full-space reduced density matrix.
 */

#pragma once

#include "idpent/hilbert.hpp"

#include <span>
#include <vector>

namespace idpent {

enum class Exchange : int { Boson = 1, Fermion = -1 };

constexpr double eta_value(Exchange eta) noexcept { return static_cast<double>(static_cast<int>(eta)); }

/// Squared norms at or below this mark a pair or state as null.
inline constexpr double kNullThreshold = 1e-12;
/// Constituents closer than this (in norm) are merged by canonicalization.
inline constexpr double kMergeTolerance = 1e-12;

class NoLabelPair {
 public:
  NoLabelPair(Ket phi1, Ket phi2, Exchange eta);

  const Ket& phi1() const noexcept { return phi1_; }
  const Ket& phi2() const noexcept { return phi2_; }
  Exchange eta() const noexcept { return eta_; }
  const SpacePtr& space_ptr() const noexcept { return phi1_.space_ptr(); }

  /// <φ1|φ1><φ2|φ2> + η|<φ1|φ2>|².
  double squared_norm() const;
  /// Fermionic pairs with φ2 ∝ φ1 have zero norm.
  bool is_null() const { return squared_norm() <= kNullThreshold; }

 private:
  Ket phi1_;
  Ket phi2_;
  Exchange eta_;
};

struct NoLabelTerm {
  cplx coefficient;
  NoLabelPair pair;
};

class NoLabelState {
 public:
  NoLabelState(SpacePtr space, Exchange eta);
  NoLabelState(const NoLabelPair& pair, cplx coefficient = 1.0);  // NOLINT(google-explicit-constructor)

  void add(cplx coefficient, const NoLabelPair& pair);

  const std::vector<NoLabelTerm>& terms() const noexcept { return terms_; }
  Exchange eta() const noexcept { return eta_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }

  double squared_norm() const;
  bool is_null() const { return squared_norm() <= kNullThreshold; }
  /// Throws NULL_STATE for null states.
  NoLabelState normalized() const;

  /// Merges terms whose constituents coincide, directly or swapped (using
  /// |φ2,φ1> = η|φ1,φ2>), and drops vanishing coefficients.
  NoLabelState canonicalized() const;

  NoLabelState operator+(const NoLabelState& other) const;
  NoLabelState operator*(cplx scale) const;

 private:
  SpacePtr space_;
  Exchange eta_;
  std::vector<NoLabelTerm> terms_;
};

cplx nl_inner(const NoLabelPair& a, const NoLabelPair& b);
cplx nl_inner(const NoLabelState& a, const NoLabelState& b);

/// (φ1⊗φ2 + η φ2⊗φ1)/√2, unnormalized.
Ket to_first_quantized(const NoLabelPair& pair);
Ket to_first_quantized(const NoLabelState& state);

/// A⊗1 + 1⊗A, the first-quantized matrix of A⁽¹⁾.
OperatorMatrix extended_operator_matrix(const OperatorMatrix& op);

NoLabelState extend_one_particle_op(const OperatorMatrix& op, const NoLabelState& state);

/// Π_ψ: |φ1,φ2> ↦ <ψ|φ1>|φ2> + η<ψ|φ2>|φ1>, extended linearly.
Ket reduce(const Ket& psi, const NoLabelState& state);

/// Σ_k |ψ_k><ψ_k| over the given kets.
OperatorMatrix projector_onto(std::span<const Ket> basis);

struct ReducedDM {
  OperatorMatrix matrix;
  OperatorMatrix subspace_projector;
  /// 𝒩_𝕂 = ½ Σ_k ‖Π_ψk Φ‖² for the normalized state Φ.
  double normalization;
};

/// ρ = Σ_k Π_ψk |Φ><Φ| Π_ψk† / (2 𝒩_𝕂) for the normalized state Φ.
ReducedDM k_reduced_dm(const NoLabelState& state, std::span<const Ket> k_basis);

/// Closed form of the 𝕂-reduced matrix for a single pair, written in terms of
/// <φ_i|P_𝕂|φ_j>. Same normalization convention as k_reduced_dm.
ReducedDM k_reduced_dm_closed_form(const NoLabelPair& pair, const OperatorMatrix& subspace_projector);

/// Full-space (𝕂 = ℍ) closed form for unit constituents:
/// (|φ1><φ1| + |φ2><φ2| + η(<φ1|φ2>|φ1><φ2| + h.c.)) / (2(1 + η|<φ1|φ2>|²)).
OperatorMatrix full_reduced_dm_closed_form(const NoLabelPair& pair);

/// Entropy (bits) of the 𝕂-reduced density matrix.
double entanglement_entropy(const NoLabelState& state, std::span<const Ket> k_basis);

/// <Φ|A⁽¹⁾|Φ> / <Φ|Φ>.
double expectation_extended(const NoLabelState& state, const OperatorMatrix& op);
/// (<φ1|A|φ1> + <φ2|A|φ2> + 2η Re(<φ2|A|φ1><φ1|φ2>)) / 𝒩 for unit constituents.
double expectation_extended_closed_form(const NoLabelPair& pair, const OperatorMatrix& op);

/// Tr(ρ A).
double expectation_reduced(const ReducedDM& reduced, const OperatorMatrix& op);
/// Tr(ρ^𝕂 A) written through <φ_i|A|φ_j> and <φ_i|P_𝕂|φ_j>, for unit constituents.
double expectation_reduced_closed_form(const NoLabelPair& pair, const OperatorMatrix& op,
                                       const OperatorMatrix& subspace_projector);

struct PairExpectation {
  double joint;    // <O1⁽¹⁾ O2⁽¹⁾>
  double product;  // <O1⁽¹⁾> <O2⁽¹⁾>
  double first;    // <O1⁽¹⁾>
  double second;   // <O2⁽¹⁾>
};

/// Requires [O1, O2] = 0 (NONCOMMUTING otherwise).
PairExpectation extended_pair_expectation(const NoLabelState& state, const OperatorMatrix& o1,
                                          const OperatorMatrix& o2);

struct FactorizationSides {
  double lhs;
  double rhs;
};

/// For orthonormal constituents and commuting hermitian O1, O2, factorization
/// <O1⁽¹⁾O2⁽¹⁾> = <O1⁽¹⁾><O2⁽¹⁾> holds iff
///   <φ1|O1O2|φ1> + <φ2|O1O2|φ2> + 2η Re(<φ1|O1|φ2><φ2|O2|φ1>)
///     = <φ1|O1|φ1><φ1|O2|φ1> + <φ2|O2|φ2><φ2|O1|φ2>.
/// Returns both sides. They differ from `joint` and `product` of
/// extended_pair_expectation by the same cross term.
FactorizationSides factorization_identity_sides(const NoLabelPair& pair, const OperatorMatrix& o1,
                                                const OperatorMatrix& o2);

}  // namespace idpent
