// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number spaces over a finite mode set and their ladder operators.
 *
 * Bosonic spaces are truncated at a maximum total particle number. A product of
 * k ladder operators has exact matrix elements <a|X|b> whenever
 * (n_a + n_b + k) / 2 <= cutoff, so expectation values in the N-particle sector
 * of degree-2D products are exact for cutoff >= N + D.
 *
 * Fermionic operators use a Jordan-Wigner string ordered by mode index.
 */

#pragma once

#include "idpent/hilbert.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace idpent {

enum class Statistics { Boson, Fermion };

using Occupation = std::vector<int>;

class FockSpace {
 public:
  /// Enumerates all occupations with total number <= cutoff, grouped by total
  /// number and in descending lexicographic order inside each group.
  static FockSpace build(Statistics statistics, int modes, int cutoff, std::vector<std::string> mode_labels = {});

  Statistics statistics() const noexcept { return statistics_; }
  int mode_count() const noexcept { return static_cast<int>(mode_space_->dim()); }
  int cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }

  const std::vector<Occupation>& basis() const noexcept { return basis_; }
  std::optional<int> index_of(const Occupation& occupation) const;
  int total_number(int index) const;

  /// Hilbert space whose labels are the comma-joined occupations.
  const SpacePtr& hilbert() const noexcept { return hilbert_; }
  /// Single-particle mode space (labels "L","R" for two modes unless given).
  const SpacePtr& mode_space() const noexcept { return mode_space_; }

  /// Basis indices with total number <= max_total.
  std::vector<int> sectors_up_to(int max_total) const;
  /// Basis indices of the states on which degree-`degree` monomials act exactly
  /// inside compressed products (total number <= cutoff - degree). Fermionic
  /// spaces are never truncated, so this is the full basis for them.
  std::vector<int> exact_domain(int degree) const;

  Ket vacuum() const;
  Ket basis_ket(const Occupation& occupation) const;

  /// Elementary creation matrix a†_i.
  const Matrix& raising(int mode) const { return raising_.at(static_cast<size_t>(mode)); }

 private:
  FockSpace() = default;

  Statistics statistics_ = Statistics::Boson;
  int cutoff_ = 0;
  std::vector<Occupation> basis_;
  std::map<Occupation, int> index_;
  SpacePtr hilbert_;
  SpacePtr mode_space_;
  std::vector<Matrix> raising_;
};

enum class LadderKind { Creation, Annihilation, General };

struct ModeOperator {
  LadderKind kind;
  OperatorMatrix matrix;
  Ket mode_vector;

  /// Swaps creation and annihilation; the mode vector is unchanged.
  ModeOperator adjoint() const;
};

/// a†(f) = Σ f_i a†_i.
ModeOperator creation_op(const FockSpace& space, const Ket& mode);
/// a(f) = Σ conj(f_i) a_i, antilinear in f.
ModeOperator annihilation_op(const FockSpace& space, const Ket& mode);
ModeOperator creation_op(const FockSpace& space, int mode);
ModeOperator annihilation_op(const FockSpace& space, int mode);

/// Largest deviation from the CCR (boson) or CAR (fermion) among
/// [a(f), a†(g)] = <f|g>, [a(f), a(g)] = 0 and [a†(f), a†(g)] = 0, with each
/// residual restricted to input states of total number <= max_sector.
/// Default max_sector: cutoff - 1 for bosons, cutoff for fermions.
double check_ccr_car(const FockSpace& space, const Ket& f, const Ket& g, std::optional<int> max_sector = {});

/// |k> = (a†_L)^k (a†_R)^(N-k) |0> / sqrt(k! (N-k)!) on a two-mode space.
Ket number_state(const FockSpace& space, int k, int total);

/// Annihilators for (e_L ± e_R)/√2.
std::pair<ModeOperator, ModeOperator> bogoliubov_modes(const FockSpace& space);

/// Polynomial in a single mode's (a, a†) with one coefficient per word of
/// length <= degree. Words are ordered by length, then lexicographically with
/// letter 0 = a and letter 1 = a†, so the empty word (identity) comes first.
class LadderPolynomial {
 public:
  LadderPolynomial(int degree, std::vector<cplx> coefficients);

  /// Standard normal real and imaginary parts for each coefficient.
  static LadderPolynomial random(int degree, std::mt19937_64& rng);
  static int word_count(int degree);

  int degree() const noexcept { return degree_; }
  const std::vector<cplx>& coefficients() const noexcept { return coefficients_; }
  Matrix evaluate(const ModeOperator& annihilator) const;

 private:
  int degree_;
  std::vector<cplx> coefficients_;
};

}  // namespace idpent
