// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/algebra.hpp"
#include "idpent/error.hpp"
#include "idpent/fock.hpp"
#include "idpent/random.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace idpent;

namespace {

SpacePtr two_qubits() { return bell_psi(+1).space_ptr(); }

OperatorMatrix op2(const Matrix& m) { return {two_qubits(), m}; }

Ket k00() { return Ket::basis(two_qubits(), 0); }

bool contains(const Subalgebra& s, const Matrix& m) {
  for (const auto& x : s.monomials())
    if ((x.matrix - m).norm() < 1e-10) return true;
  return false;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("generate: idempotent projector") {
  const OperatorMatrix p = OperatorMatrix::projector(bell_phi(+1));
  const Subalgebra s = Subalgebra::generate({p}, 3);
  REQUIRE(s.monomials().size() == 2);
  CHECK(s.monomials()[0].matrix.isApprox(Matrix::Identity(4, 4)));
  CHECK(s.monomials()[1].matrix.isApprox(p.entries()));
  CHECK(s.describe(0) == "1");
  CHECK(s.describe(1) == "g0");
}

TEST_CASE("generate: orthogonal projectors drop the zero product") {
  const Matrix pp = OperatorMatrix::projector(bell_phi(+1)).entries();
  const Matrix ps = OperatorMatrix::projector(bell_psi(+1)).entries();
  CHECK(oracle::max_abs(pp * ps) < 1e-15);
  const Subalgebra s = Subalgebra::generate({op2(pp), op2(ps)}, 2);
  CHECK(s.monomials().size() == 3);
  CHECK(contains(s, Matrix::Identity(4, 4)));
  CHECK(contains(s, pp));
  CHECK(contains(s, ps));
}

TEST_CASE("generate: adjoints adjoined, products present") {
  const FockSpace fs = FockSpace::build(Statistics::Boson, 1, 4);
  const OperatorMatrix a = annihilation_op(fs, 0).matrix;
  const Subalgebra s = Subalgebra::generate({a}, 2);
  CHECK(s.generators().size() == 2);
  CHECK(contains(s, a.entries().adjoint() * a.entries()));
  CHECK(contains(s, a.entries() * a.entries().adjoint()));
  for (const auto& m : s.monomials()) CHECK(contains(s, m.matrix.adjoint()));
}

TEST_CASE("subalgebras_commute") {
  const auto [left, right] = particle_local_subalgebras();
  CHECK(subalgebras_commute(left, right) < 1e-12);
  const auto [ap, am] = bell_subalgebras();
  CHECK(subalgebras_commute(ap, am) < 1e-12);
  CHECK(subalgebras_commute(ap, ap) < 1e-12);

  const Matrix id = pauli(0);
  const Subalgebra s3 = Subalgebra::generate({op2(kron(pauli(3), id))}, 2);
  const Subalgebra s1 = Subalgebra::generate({op2(kron(pauli(1), id))}, 2);
  CHECK(std::abs(subalgebras_commute(s3, s1) - 2.0) < 1e-12);
}

TEST_CASE("Bell projector matrix from its tensor expansion") {
  Matrix e00 = Matrix::Zero(2, 2), e11 = Matrix::Zero(2, 2), e01 = Matrix::Zero(2, 2), e10 = Matrix::Zero(2, 2);
  e00(0, 0) = e11(1, 1) = e01(0, 1) = e10(1, 0) = 1.0;
  const Matrix expansion =
      0.5 * (oracle::kron(e00, e00) + oracle::kron(e01, e01) + oracle::kron(e10, e10) + oracle::kron(e11, e11));
  CHECK(oracle::max_abs(OperatorMatrix::projector(bell_phi(+1)).entries() - expansion) < 1e-15);
}

TEST_CASE("factorization_test: particle locality and the Bell subalgebras") {
  const auto [left, right] = particle_local_subalgebras();
  const auto [ap, am] = bell_subalgebras();

  const FactorizationReport local = factorization_test(k00(), left, right);
  CHECK(local.verdict == Verdict::SeparableWrt);
  CHECK(local.max_violation <= 1e-9);

  const FactorizationReport bell = factorization_test(k00(), ap, am);
  CHECK(bell.verdict == Verdict::EntangledWrt);
  CHECK(std::abs(bell.max_monomial_violation - 0.25) < 1e-12);
  const auto worst = std::max_element(bell.per_pair.begin(), bell.per_pair.end(),
                                      [](const PairEvaluation& x, const PairEvaluation& y) { return x.violation < y.violation; });
  CHECK(ap.monomials()[static_cast<size_t>(worst->left)].matrix.isApprox(OperatorMatrix::projector(bell_phi(+1)).entries()));
  CHECK(am.monomials()[static_cast<size_t>(worst->right)].matrix.isApprox(OperatorMatrix::projector(bell_phi(-1)).entries()));
  CHECK(std::abs(worst->joint) < 1e-12);
  CHECK(std::abs(worst->left_mean * worst->right_mean - 0.25) < 1e-12);

  for (const Ket& b : {bell_psi(+1), bell_psi(-1), bell_phi(+1), bell_phi(-1)}) {
    CHECK(factorization_test(b, ap, am).verdict == Verdict::SeparableWrt);
    const FactorizationReport r = factorization_test(b, left, right);
    CHECK(r.verdict == Verdict::EntangledWrt);
    CHECK(r.max_monomial_violation >= 1.0 - 1e-12);
  }
}

TEST_CASE("Psi+ expectations of the Psi projectors") {
  const Ket psi = bell_psi(+1);
  const Matrix p_plus = OperatorMatrix::projector(bell_psi(+1)).entries();
  const Matrix p_minus = OperatorMatrix::projector(bell_psi(-1)).entries();
  const Vector v = psi.amplitudes();
  CHECK(std::abs(v.dot(p_plus * p_minus * v)) < 1e-12);
  CHECK(std::abs(v.dot(p_minus * v)) < 1e-12);
  CHECK(std::abs(v.dot(p_plus * v) - 1.0) < 1e-12);
}

TEST_CASE("factorization_test: product states with particle-local algebras") {
  std::mt19937_64 rng(31);
  const auto [left, right] = particle_local_subalgebras();
  for (int trial = 0; trial < 10; ++trial) {
    const Ket a = random_ket(HilbertSpace::qubit(), rng), b = random_ket(HilbertSpace::qubit(), rng);
    const Ket prod(two_qubits(), oracle::kron(a.amplitudes(), b.amplitudes()));
    const FactorizationReport r = factorization_test(prod, left, right);
    CHECK(r.max_violation <= 1e-9);
    CHECK(r.verdict == Verdict::SeparableWrt);
  }
}

TEST_CASE("factorization_test: swap symmetry and scale invariance") {
  std::mt19937_64 rng(37);
  const auto [left, right] = particle_local_subalgebras();
  for (int trial = 0; trial < 5; ++trial) {
    const Ket psi = random_ket(two_qubits(), rng);
    const FactorizationReport ab = factorization_test(psi, left, right);
    const FactorizationReport ba = factorization_test(psi, right, left);
    CHECK(std::abs(ab.max_violation - ba.max_violation) < 1e-9);
    CHECK(ab.verdict == ba.verdict);
  }

  const Matrix pp = OperatorMatrix::projector(bell_phi(+1)).entries();
  const Matrix pm = OperatorMatrix::projector(bell_phi(-1)).entries();
  const Subalgebra small_a = Subalgebra::generate({op2(pp)}, 2), small_b = Subalgebra::generate({op2(pm)}, 2);
  const Subalgebra big_a = Subalgebra::generate({op2(7.0 * pp)}, 2), big_b = Subalgebra::generate({op2(0.01 * pm)}, 2);
  const FactorizationReport r1 = factorization_test(k00(), small_a, small_b);
  const FactorizationReport r2 = factorization_test(k00(), big_a, big_b);
  CHECK(r1.verdict == r2.verdict);
  CHECK(std::abs(r1.max_monomial_violation - r2.max_monomial_violation) < 1e-12);
}

TEST_CASE("factorization_test: errors") {
  const Matrix id = pauli(0);
  const Subalgebra s3 = Subalgebra::generate({op2(kron(pauli(3), id))}, 2);
  const Subalgebra s1 = Subalgebra::generate({op2(kron(pauli(1), id))}, 2);
  try {
    (void)factorization_test(k00(), s3, s1);
    FAIL("expected NONCOMMUTING");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommuting);
  }
  const auto [left, right] = particle_local_subalgebras();
  CHECK_THROWS_AS(factorization_test(k00() * 2.0, left, right), Error);
  CHECK_THROWS_AS(factorization_test(Ket::basis(HilbertSpace::qubit(), 0), left, right), Error);
}

TEST_CASE("mode subalgebras on a truncated bosonic space") {
  const FockSpace fs = FockSpace::build(Statistics::Boson, 2, 6);
  const Subalgebra al = Subalgebra::generate({annihilation_op(fs, 0).matrix}, 4, "A_L");
  const Subalgebra ar = Subalgebra::generate({annihilation_op(fs, 1).matrix}, 4, "A_R");
  const std::vector<int> dom = fs.exact_domain(4);
  CHECK(subalgebras_commute(al, ar) > 1e-3);
  CHECK(subalgebras_commute(al, ar, dom) < 1e-12);

  FactorizationOptions opts;
  opts.domain = dom;
  for (int k = 0; k <= 2; ++k) {
    CHECK(factorization_test(number_state(fs, k, 2), al, ar, opts).verdict == Verdict::SeparableWrt);
  }
  const auto [bp, bm] = bogoliubov_modes(fs);
  const Subalgebra sp = Subalgebra::generate({bp.matrix}, 4), sm = Subalgebra::generate({bm.matrix}, 4);
  const FactorizationReport r = factorization_test(number_state(fs, 1, 2), sp, sm, opts);
  CHECK(r.verdict == Verdict::EntangledWrt);
  CHECK(r.max_violation > 0.01);

  opts.domain = fs.exact_domain(5);
  CHECK_THROWS_AS(factorization_test(number_state(fs, 1, 2), al, ar, opts), Error);
}

}  // TEST_SUITE
