// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/algebra.hpp"

#include "idpent/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace idpent {

namespace {

Matrix compress(const Matrix& m, std::span<const int> domain) {
  if (domain.empty()) return m;
  const std::vector<int> idx(domain.begin(), domain.end());
  return m(idx, idx);
}

double unit_scale(const Matrix& m, std::span<const int> domain) {
  const double n = operator_norm(compress(m, domain));
  return n > kMonomialDedupTolerance ? 1.0 / n : 0.0;
}

bool already_present(const std::vector<Monomial>& list, const Matrix& m) {
  return std::any_of(list.begin(), list.end(),
                     [&](const Monomial& x) { return (x.matrix - m).norm() <= kMonomialDedupTolerance; });
}

std::vector<Matrix> normalized_monomials(const Subalgebra& s, std::span<const int> domain) {
  std::vector<Matrix> out;
  out.reserve(s.monomials().size());
  for (const auto& m : s.monomials()) out.push_back(m.matrix * unit_scale(m.matrix, domain));
  return out;
}

Matrix random_hermitian(const std::vector<Matrix>& basis, std::span<const int> domain, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix h = Matrix::Zero(basis.front().rows(), basis.front().cols());
  for (const Matrix& m : basis) {
    const double re = normal(rng);
    const double im = normal(rng);
    h += cplx(re, im) * m;
  }
  h = h + h.adjoint().eval();
  return h * unit_scale(h, domain);
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::SeparableWrt ? "separable_wrt" : "entangled_wrt";
}

Subalgebra Subalgebra::generate(std::vector<OperatorMatrix> generators, int degree_bound, std::string name) {
  if (degree_bound < 1) throw Error(ErrorCode::Range, "degree bound must be at least 1");
  if (generators.empty()) throw Error(ErrorCode::Dim, "need at least one generator");
  const int dim = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != dim) throw Error(ErrorCode::Dim, "generators have different dimensions");
  }

  Subalgebra s;
  s.name_ = std::move(name);
  s.dim_ = dim;
  s.degree_bound_ = degree_bound;

  // Close the generating set under adjoint.
  const size_t given = generators.size();
  for (size_t i = 0; i < given; ++i) {
    const Matrix adj = generators[i].entries().adjoint();
    const bool present = std::any_of(generators.begin(), generators.end(), [&](const OperatorMatrix& g) {
      return (g.entries() - adj).norm() <= kMonomialDedupTolerance;
    });
    if (!present) generators.push_back(generators[i].adjoint());
  }
  s.generators_ = std::move(generators);

  s.monomials_.push_back({{}, Matrix::Identity(dim, dim)});
  std::vector<size_t> frontier{0};
  for (int len = 1; len <= degree_bound && !frontier.empty(); ++len) {
    std::vector<size_t> next;
    for (size_t parent : frontier) {
      for (size_t g = 0; g < s.generators_.size(); ++g) {
        Matrix product = s.monomials_[parent].matrix * s.generators_[g].entries();
        if (product.norm() <= kMonomialDedupTolerance) continue;
        if (already_present(s.monomials_, product)) continue;
        std::vector<int> word = s.monomials_[parent].word;
        word.push_back(static_cast<int>(g));
        s.monomials_.push_back({std::move(word), std::move(product)});
        next.push_back(s.monomials_.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return s;
}

std::string Subalgebra::describe(int monomial_index) const {
  const auto& word = monomials_.at(static_cast<size_t>(monomial_index)).word;
  if (word.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) out += '*';
    out += 'g' + std::to_string(word[k]);
  }
  return out;
}

double subalgebras_commute(const Subalgebra& a, const Subalgebra& b, std::span<const int> domain) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::Dim, "subalgebras act on different dimensions");
  const auto xs = normalized_monomials(a, domain);
  const auto ys = normalized_monomials(b, domain);
  double worst = 0.0;
  for (const Matrix& x : xs)
    for (const Matrix& y : ys) worst = std::max(worst, operator_norm(compress(commutator(x, y), domain)));
  return worst;
}

FactorizationReport factorization_test(const Ket& state, const Subalgebra& a, const Subalgebra& b,
                                       const FactorizationOptions& options) {
  if (a.dim() != b.dim() || state.dim() != a.dim()) throw Error(ErrorCode::Dim, "factorization_test: dimension mismatch");
  if (std::abs(state.norm() - 1.0) > kTolerance) throw Error(ErrorCode::Norm, "factorization_test: state not normalized");
  const std::span<const int> domain(options.domain);
  if (!domain.empty()) {
    double outside = state.amplitudes().squaredNorm();
    for (int i : domain) outside -= std::norm(state.amplitudes()(i));
    if (outside > kTolerance) throw Error(ErrorCode::Range, "state has weight outside the evaluation domain");
  }
  const double comm = subalgebras_commute(a, b, domain);
  if (comm > options.tol) {
    throw Error(ErrorCode::NonCommuting, "subalgebras '" + a.name() + "' and '" + b.name() +
                                             "' do not commute (max commutator " + std::to_string(comm) + ")");
  }

  const Vector& psi = state.amplitudes();
  const auto xs = normalized_monomials(a, domain);
  const auto ys = normalized_monomials(b, domain);

  FactorizationReport report;
  report.per_pair.reserve(xs.size() * ys.size());
  // ω(x y) = <x† ψ | y ψ>.
  std::vector<Vector> left_bras, right_kets;
  std::vector<cplx> left_means, right_means;
  for (const Matrix& x : xs) {
    left_bras.push_back(x.adjoint() * psi);
    left_means.push_back(psi.dot(x * psi));
  }
  for (const Matrix& y : ys) {
    right_kets.push_back(y * psi);
    right_means.push_back(psi.dot(y * psi));
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = 0; j < ys.size(); ++j) {
      PairEvaluation e;
      e.left = static_cast<int>(i);
      e.right = static_cast<int>(j);
      e.joint = left_bras[i].dot(right_kets[j]);
      e.left_mean = left_means[i];
      e.right_mean = right_means[j];
      e.violation = std::abs(e.joint - e.left_mean * e.right_mean);
      if (e.violation > report.max_monomial_violation) {
        report.max_monomial_violation = e.violation;
        report.witness = {e.left, e.right, false};
      }
      report.per_pair.push_back(e);
    }
  }

  report.max_violation = report.max_monomial_violation;
  // One stream per side, both from the same seed, so swapping the
  // subalgebras swaps the sampled elements.
  std::mt19937_64 rng_left(options.seed);
  std::mt19937_64 rng_right(options.seed);
  for (int s = 0; s < options.sample_count; ++s) {
    const Matrix h1 = random_hermitian(xs, domain, rng_left);
    const Matrix h2 = random_hermitian(ys, domain, rng_right);
    const Vector h2psi = h2 * psi;
    const cplx joint = (h1 * psi).dot(h2psi);
    const cplx m1 = psi.dot(h1 * psi);
    const cplx m2 = psi.dot(h2psi);
    const double v = std::abs(joint - m1 * m2);
    report.max_sampled_violation = std::max(report.max_sampled_violation, v);
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness = {s, s, true};
    }
  }
  report.sample_count = options.sample_count;
  report.verdict = report.max_violation > options.tol ? Verdict::EntangledWrt : Verdict::SeparableWrt;
  report.note = "checked " + std::to_string(xs.size() * ys.size()) + " monomial pairs (degree <= " +
                std::to_string(std::max(a.degree_bound(), b.degree_bound())) + ", non-hermitian included) and " +
                std::to_string(options.sample_count) +
                " random hermitian combinations; factorization on these does not certify the whole algebra";
  return report;
}

std::pair<Subalgebra, Subalgebra> bell_subalgebras(int degree_bound) {
  auto proj = [](const Ket& k) { return OperatorMatrix::projector(k); };
  return {Subalgebra::generate({proj(bell_psi(+1)), proj(bell_phi(+1))}, degree_bound, "A+"),
          Subalgebra::generate({proj(bell_psi(-1)), proj(bell_phi(-1))}, degree_bound, "A-")};
}

std::pair<Subalgebra, Subalgebra> particle_local_subalgebras(int degree_bound) {
  const SpacePtr space = bell_psi(+1).space_ptr();
  const Matrix id = pauli(0);
  std::vector<OperatorMatrix> left, right;
  for (int k = 1; k <= 3; ++k) {
    left.emplace_back(space, kron(pauli(k), id));
    right.emplace_back(space, kron(id, pauli(k)));
  }
  return {Subalgebra::generate(std::move(left), degree_bound, "M2 x 1"),
          Subalgebra::generate(std::move(right), degree_bound, "1 x M2")};
}

}  // namespace idpent
