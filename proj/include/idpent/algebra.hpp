// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file algebra.hpp
 * @brief Finitely generated operator subalgebras and expectation factorization.
 *
 * A state is separable with respect to a commuting pair of subalgebras when
 * ω(x1 x2) = ω(x1) ω(x2) for all x1 in the first and x2 in the second. The
 * test here covers every pair of monomials up to the degree bound plus a set
 * of seeded random hermitian combinations of monomials; monomial-pair
 * factorization alone does not imply factorization on linear combinations.
 *
 * Optionally the checks are restricted to a domain of basis indices. This is
 * how truncated bosonic Fock spaces are handled: only matrix elements between
 * states of the domain are inspected, and monomials are normalized by the norm
 * of their compression onto the domain.
 */

#pragma once

#include "idpent/hilbert.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace idpent {

/// Dedup threshold on the Frobenius norm of a difference.
inline constexpr double kMonomialDedupTolerance = 1e-10;

struct Monomial {
  std::vector<int> word;  // indices into Subalgebra::generators(); empty = identity
  Matrix matrix;
};

class Subalgebra {
 public:
  /// Adjoins the identity and the adjoints of the generators, then forms all
  /// products of at most `degree_bound` generators. Duplicates and zero
  /// products are dropped.
  static Subalgebra generate(std::vector<OperatorMatrix> generators, int degree_bound, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }
  int degree_bound() const noexcept { return degree_bound_; }
  const std::vector<OperatorMatrix>& generators() const noexcept { return generators_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  std::string describe(int monomial_index) const;

 private:
  std::string name_;
  int dim_ = 0;
  int degree_bound_ = 0;
  std::vector<OperatorMatrix> generators_;
  std::vector<Monomial> monomials_;
};

enum class Verdict { SeparableWrt, EntangledWrt };

std::string_view to_string(Verdict verdict) noexcept;

/// Max over monomial pairs of ‖[x, y]‖ for unit-norm x, y, restricted to the
/// domain when one is given.
double subalgebras_commute(const Subalgebra& a, const Subalgebra& b, std::span<const int> domain = {});

struct FactorizationOptions {
  double tol = kTolerance;
  int sample_count = 64;
  std::uint64_t seed = 42;
  std::vector<int> domain;  // empty = whole space
};

struct PairEvaluation {
  int left = 0;
  int right = 0;
  cplx joint;       // ω(x1 x2)
  cplx left_mean;   // ω(x1)
  cplx right_mean;  // ω(x2)
  double violation = 0.0;  // |ω(x1 x2) − ω(x1) ω(x2)| for unit-norm x1, x2
};

struct Witness {
  int left = -1;
  int right = -1;
  bool sampled = false;  // indices are sample numbers rather than monomials
};

struct FactorizationReport {
  double max_violation = 0.0;
  double max_monomial_violation = 0.0;
  double max_sampled_violation = 0.0;
  Witness witness;
  std::vector<PairEvaluation> per_pair;
  Verdict verdict = Verdict::SeparableWrt;
  int sample_count = 0;
  std::string note;
};

/// Requires the subalgebras to commute within options.tol (NONCOMMUTING).
FactorizationReport factorization_test(const Ket& state, const Subalgebra& a, const Subalgebra& b,
                                       const FactorizationOptions& options = {});

/// 𝒜₊ generated by {1, P^Ψ₊, P^Φ₊} and 𝒜₋ by {1, P^Ψ₋, P^Φ₋} on C^2 ⊗ C^2.
std::pair<Subalgebra, Subalgebra> bell_subalgebras(int degree_bound = 4);

/// (M_2 ⊗ 1, 1 ⊗ M_2) generated by the Pauli matrices on each factor.
std::pair<Subalgebra, Subalgebra> particle_local_subalgebras(int degree_bound = 4);

}  // namespace idpent
