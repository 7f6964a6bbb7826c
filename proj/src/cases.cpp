// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/cases.hpp"

#include "idpent/error.hpp"
#include "idpent/fock.hpp"
#include "idpent/nolabel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace idpent {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

class CaseBuilder {
 public:
  CaseBuilder(std::string id, const CaseOptions& options) : options_(options) { result_.case_id = std::move(id); }

  void quantity(std::string name, cplx computed, cplx expected, std::string provenance) {
    result_.quantities.push_back({std::move(name), computed, expected, std::move(provenance)});
  }

  void verdict(std::string context, Verdict got, Verdict expected) {
    result_.verdicts.push_back({std::move(context), got, expected});
  }

  void input(std::string name, cplx value) { result_.inputs.push_back({std::move(name), value}); }

  const CaseOptions& options() const { return options_; }

  FactorizationOptions factorization(std::vector<int> domain = {}) const {
    FactorizationOptions f;
    f.tol = options_.tolerance;
    f.seed = options_.seed;
    f.domain = std::move(domain);
    return f;
  }

  CaseResult finish() {
    result_.max_abs_deviation = 0.0;
    for (const auto& q : result_.quantities) result_.max_abs_deviation = std::max(result_.max_abs_deviation, q.deviation());
    return std::move(result_);
  }

 private:
  CaseOptions options_;
  CaseResult result_;
};

std::string eta_tag(Exchange eta) { return eta == Exchange::Boson ? "eta=+1" : "eta=-1"; }

// ---------------------------------------------------------------------------
// Two distinguishable qubits

OperatorMatrix two_qubit_op(const Matrix& left, const Matrix& right) {
  return {bell_psi(+1).space_ptr(), kron(left, right)};
}

Ket product_00() { return Ket::basis(bell_psi(+1).space_ptr(), 0); }

CaseResult bell_particle_local(const CaseOptions& options) {
  CaseBuilder b("bell-particle-local", options);
  const Ket psi = bell_psi(+1);
  const cplx joint = expectation(psi, two_qubit_op(pauli(3), pauli(3)));
  const cplx first = expectation(psi, two_qubit_op(pauli(3), pauli(0)));
  const cplx second = expectation(psi, two_qubit_op(pauli(0), pauli(3)));
  b.quantity("<Psi+|s3 x s3|Psi+>", joint, -1.0, "published: sigma3 correlator on the Bell state Psi+ equals -1");
  b.quantity("<Psi+|s3 x 1|Psi+> <Psi+|1 x s3|Psi+>", first * second, 0.0,
             "published: product of the sigma3 marginals on Psi+ equals 0");
  b.quantity("<Psi+|s3 x 1|Psi+>", first, 0.0, "derived: Psi+ has a maximally mixed first-qubit marginal");
  b.quantity("|joint - product|", std::abs(joint - first * second), 1.0,
             "derived: difference of the two published values -1 and 0");
  const auto [left, right] = particle_local_subalgebras();
  b.verdict("Psi+ vs (M2 x 1, 1 x M2)", factorization_test(psi, left, right, b.factorization()).verdict,
            Verdict::EntangledWrt);
  return b.finish();
}

CaseResult product_vs_apm(const CaseOptions& options) {
  CaseBuilder b("product-vs-Apm", options);
  const Ket psi = product_00();
  const OperatorMatrix p_plus = OperatorMatrix::projector(bell_phi(+1));
  const OperatorMatrix p_minus = OperatorMatrix::projector(bell_phi(-1));
  const cplx joint = expectation(psi, p_plus * p_minus);
  const cplx m_plus = expectation(psi, p_plus);
  const cplx m_minus = expectation(psi, p_minus);
  b.quantity("<00|P_Phi+ P_Phi-|00>", joint, 0.0, "published: the Phi+/Phi- projector correlator on |0>|0> is 0");
  b.quantity("<00|P_Phi+|00> <00|P_Phi-|00>", m_plus * m_minus, 0.25,
             "published: product of the Phi+/Phi- projector means on |0>|0> is 1/4");
  b.quantity("<00|P_Phi+|00>", m_plus, 0.5, "derived: |<Phi+|00>|^2 = 1/2");
  b.quantity("<00|P_Phi-|00>", m_minus, 0.5, "derived: |<Phi-|00>|^2 = 1/2");

  const auto [local_a, local_b] = particle_local_subalgebras();
  const auto [a_plus, a_minus] = bell_subalgebras();
  b.verdict("|0>|0> vs (M2 x 1, 1 x M2)", factorization_test(psi, local_a, local_b, b.factorization()).verdict,
            Verdict::SeparableWrt);
  b.verdict("|0>|0> vs (A+, A-)", factorization_test(psi, a_plus, a_minus, b.factorization()).verdict,
            Verdict::EntangledWrt);
  return b.finish();
}

CaseResult bell_vs_apm(const CaseOptions& options) {
  CaseBuilder b("bell-vs-Apm", options);
  const auto [a_plus, a_minus] = bell_subalgebras();
  const auto [local_a, local_b] = particle_local_subalgebras();
  const OperatorMatrix s33 = two_qubit_op(pauli(3), pauli(3));
  const OperatorMatrix s3_1 = two_qubit_op(pauli(3), pauli(0));
  const OperatorMatrix s1_3 = two_qubit_op(pauli(0), pauli(3));
  const std::pair<std::string, Ket> states[] = {
      {"Psi+", bell_psi(+1)}, {"Psi-", bell_psi(-1)}, {"Phi+", bell_phi(+1)}, {"Phi-", bell_phi(-1)}};
  for (const auto& [name, psi] : states) {
    const FactorizationReport apm = factorization_test(psi, a_plus, a_minus, b.factorization());
    b.quantity("max violation vs (A+, A-) on " + name, apm.max_violation, 0.0,
               "published: expectations of the Bell states factorize over (A+, A-)");
    b.verdict(name + " vs (A+, A-)", apm.verdict, Verdict::SeparableWrt);
    const cplx v = expectation(psi, s33) - expectation(psi, s3_1) * expectation(psi, s1_3);
    b.quantity("|<s3 x s3> - <s3 x 1><1 x s3>| on " + name, std::abs(v), 1.0,
               "derived: every Bell state has <s3 x s3> = +-1 and zero marginals");
    b.verdict(name + " vs (M2 x 1, 1 x M2)", factorization_test(psi, local_a, local_b, b.factorization()).verdict,
              Verdict::EntangledWrt);
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Double well in second quantization

constexpr int kWellParticles = 2;
constexpr int kWellCutoff = kWellParticles + 4;
constexpr int kMonomialDegree = 4;

Subalgebra mode_subalgebra(const ModeOperator& annihilator, std::string name) {
  return Subalgebra::generate({annihilator.matrix, annihilator.matrix.adjoint()}, kMonomialDegree, std::move(name));
}

CaseResult doublewell_number_state(const CaseOptions& options) {
  CaseBuilder b("doublewell-number-state", options);
  const FockSpace fs = FockSpace::build(Statistics::Boson, 2, kWellCutoff);
  const int k = 1;
  const Ket state = number_state(fs, k, kWellParticles);
  const ModeOperator a_left = annihilation_op(fs, 0);
  const ModeOperator a_right = annihilation_op(fs, 1);

  std::mt19937_64 rng(options.seed);
  constexpr int kPolyDegree = 3;
  constexpr int kPairs = 4;
  const std::vector<int> poly_domain = fs.exact_domain(kPolyDegree);
  const std::vector<int> idx(poly_domain.begin(), poly_domain.end());
  for (int p = 0; p < kPairs; ++p) {
    const LadderPolynomial poly_p = LadderPolynomial::random(kPolyDegree, rng);
    const LadderPolynomial poly_q = LadderPolynomial::random(kPolyDegree, rng);
    for (size_t c = 0; c < poly_p.coefficients().size(); ++c) {
      b.input("P" + std::to_string(p) + ".c" + std::to_string(c), poly_p.coefficients()[c]);
    }
    for (size_t c = 0; c < poly_q.coefficients().size(); ++c) {
      b.input("Q" + std::to_string(p) + ".c" + std::to_string(c), poly_q.coefficients()[c]);
    }
    const Matrix pm = poly_p.evaluate(a_left);
    const Matrix qm = poly_q.evaluate(a_right);
    const Vector& v = state.amplitudes();
    const cplx joint = v.dot(pm * (qm * v));
    const cplx product = v.dot(pm * v) * v.dot(qm * v);
    b.quantity("|<k|PQ|k> - <k|P|k><k|Q|k>| pair " + std::to_string(p), std::abs(joint - product), 0.0,
               "published: number states factorize left/right polynomial expectations");
    const Matrix comm = commutator(pm, qm);
    b.quantity("||[P, Q]|| on exact sectors pair " + std::to_string(p), operator_norm(comm(idx, idx)), 0.0,
               "published: left and right mode algebras commute by the CCR");
  }

  const Subalgebra left = mode_subalgebra(a_left, "A_L");
  const Subalgebra right = mode_subalgebra(a_right, "A_R");
  const auto report = factorization_test(state, left, right, b.factorization(fs.exact_domain(kMonomialDegree)));
  b.quantity("max violation vs (A_L, A_R)", report.max_violation, 0.0,
             "published: Fock number states are spatially separable");
  b.verdict("|k=1,N=2> vs (A_L, A_R)", report.verdict, Verdict::SeparableWrt);
  return b.finish();
}

CaseResult doublewell_bogoliubov(const CaseOptions& options) {
  CaseBuilder b("doublewell-bogoliubov", options);
  const FockSpace fs = FockSpace::build(Statistics::Boson, 2, kWellCutoff);
  const Ket state = number_state(fs, 1, kWellParticles);
  const auto [b_plus, b_minus] = bogoliubov_modes(fs);
  const OperatorMatrix n_plus = b_plus.matrix.adjoint() * b_plus.matrix;
  const OperatorMatrix n_minus = b_minus.matrix.adjoint() * b_minus.matrix;

  const cplx joint = expectation(state, n_plus * n_minus);
  const cplx m_plus = expectation(state, n_plus);
  const cplx m_minus = expectation(state, n_minus);
  b.quantity("<k|n+ n-|k>", joint, 0.0, "derived: |k=1,N=2> = (|2,0>_b - |0,2>_b)/sqrt2 has n+ n- = 0 termwise");
  b.quantity("<k|n+|k>", m_plus, 1.0, "derived: equal weight on n+ = 2 and n+ = 0");
  b.quantity("<k|n-|k>", m_minus, 1.0, "derived: equal weight on n- = 0 and n- = 2");
  b.quantity("|<n+ n-> - <n+><n->|", std::abs(joint - m_plus * m_minus), 1.0,
             "derived: the number state is a sum of b-number states, so b-mode correlations do not factorize");

  // Amplitudes on the b-number states (b+†)^m (b-†)^(N-m) |0> / sqrt(m! (N-m)!).
  const Matrix bp = b_plus.matrix.adjoint().entries();
  const Matrix bm = b_minus.matrix.adjoint().entries();
  const double expected[] = {-kInvSqrt2, 0.0, kInvSqrt2};
  for (int m = 0; m <= kWellParticles; ++m) {
    Vector v = fs.vacuum().amplitudes();
    for (int i = 0; i < m; ++i) v = bp * v;
    for (int i = 0; i < kWellParticles - m; ++i) v = bm * v;
    v /= std::sqrt(std::tgamma(m + 1.0) * std::tgamma(kWellParticles - m + 1.0));
    b.quantity("<" + std::to_string(m) + "," + std::to_string(kWellParticles - m) + "|_b k>", v.dot(state.amplitudes()),
               expected[m], "derived: a_L† a_R† = ((b+†)^2 - (b-†)^2)/2");
  }

  const std::vector<int> domain = fs.exact_domain(kMonomialDegree);
  const Subalgebra bplus = mode_subalgebra(b_plus, "B+");
  const Subalgebra bminus = mode_subalgebra(b_minus, "B-");
  const auto report = factorization_test(state, bplus, bminus, b.factorization(domain));
  b.verdict("|k=1,N=2> vs (B+, B-)", report.verdict, Verdict::EntangledWrt);
  const Subalgebra left = mode_subalgebra(annihilation_op(fs, 0), "A_L");
  const Subalgebra right = mode_subalgebra(annihilation_op(fs, 1), "A_R");
  b.verdict("|k=1,N=2> vs (A_L, A_R)", factorization_test(state, left, right, b.factorization(domain)).verdict,
            Verdict::SeparableWrt);
  return b.finish();
}

// ---------------------------------------------------------------------------
// No-label pairs

Verdict first_quantized_verdict(const NoLabelState& state, const OperatorMatrix& o1, const OperatorMatrix& o2,
                                const CaseBuilder& b) {
  const Ket fq = to_first_quantized(state).normalized();
  const Subalgebra a = Subalgebra::generate({extended_operator_matrix(o1)}, kMonomialDegree, "O1^(1)");
  const Subalgebra c = Subalgebra::generate({extended_operator_matrix(o2)}, kMonomialDegree, "O2^(1)");
  return factorization_test(fq, a, c, b.factorization()).verdict;
}

SpacePtr three_level_space() {
  static const SpacePtr space = HilbertSpace::make({"phi1", "phi2", "phi3"});
  return space;
}

CaseResult nolabel_factor(int which, const CaseOptions& options) {
  CaseBuilder b("nolabel-factor-" + std::to_string(which), options);
  const SpacePtr h = three_level_space();
  const Ket phi1 = Ket::basis(h, 0);
  const Ket phi2 = Ket::basis(h, 1);
  const Ket phi3 = Ket::basis(h, 2);

  OperatorMatrix o1 = OperatorMatrix::projector(phi1);
  OperatorMatrix o2 = OperatorMatrix::projector(phi2);
  if (which == 2) {
    o1 = OperatorMatrix::projector((phi1 + phi2) * kInvSqrt2);
    o2 = OperatorMatrix::projector((phi1 - phi2) * kInvSqrt2);
  } else if (which == 3) {
    o1 = OperatorMatrix::projector((phi1 + phi3) * kInvSqrt2);
    o2 = OperatorMatrix::projector((phi1 - phi3) * kInvSqrt2);
  }

  for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
    const double e = eta_value(eta);
    const NoLabelPair pair(phi1, phi2, eta);
    const FactorizationSides sides = factorization_identity_sides(pair, o1, o2);
    const PairExpectation ext = extended_pair_expectation(NoLabelState(pair), o1, o2);
    const std::string tag = " (" + eta_tag(eta) + ")";

    double lhs = 0.0, rhs = 0.0, joint = 1.0, product = 1.0;
    Verdict expected = Verdict::SeparableWrt;
    std::string lhs_src = "published: both sides of the factorization identity vanish for O1 O2 = 0 on the constituents";
    std::string rhs_src = lhs_src;
    if (which == 2) {
      lhs = -e / 2.0;
      rhs = 0.5;
      joint = 0.5 - e / 2.0;
      product = 1.0;
      lhs_src = "published: left side equals -eta/2 for projectors on (phi1 +- phi2)/sqrt2";
      rhs_src = "published: right side equals 1/2 for projectors on (phi1 +- phi2)/sqrt2";
      expected = eta == Exchange::Boson ? Verdict::EntangledWrt : Verdict::SeparableWrt;
    } else if (which == 3) {
      lhs = 0.0;
      rhs = 0.25;
      joint = 0.0;
      product = 0.25;
      lhs_src = "published: left side vanishes for projectors on (phi1 +- phi3)/sqrt2";
      rhs_src = "published: right side equals 1/4 for projectors on (phi1 +- phi3)/sqrt2";
      expected = Verdict::EntangledWrt;
    }
    b.quantity("identity lhs" + tag, sides.lhs, lhs, lhs_src);
    b.quantity("identity rhs" + tag, sides.rhs, rhs, rhs_src);
    b.quantity("<O1^(1) O2^(1)>" + tag, ext.joint, joint,
               "derived: identity lhs plus <phi1|O1|phi1><phi2|O2|phi2> + <phi2|O1|phi2><phi1|O2|phi1>");
    b.quantity("<O1^(1)><O2^(1)>" + tag, ext.product, product, "derived: identity rhs plus the same cross term");
    b.verdict("|phi1,phi2> " + eta_tag(eta) + " vs algebras of O1^(1), O2^(1)",
              first_quantized_verdict(NoLabelState(pair), o1, o2, b), expected);
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Left localization with an internal two-level degree of freedom

SpacePtr double_well_space() {
  static const SpacePtr space = HilbertSpace::make({"L,0", "L,1", "R,0", "R,1"});
  return space;
}

Ket dw(std::string_view label) { return Ket::basis(double_well_space(), label); }

std::vector<Ket> left_subspace() { return {dw("L,0"), dw("L,1")}; }

void add_matrix(CaseBuilder& b, const std::string& prefix, const Matrix& computed, const Matrix& expected,
                const std::string& provenance) {
  const auto& labels = double_well_space()->labels();
  for (int i = 0; i < computed.rows(); ++i)
    for (int j = 0; j < computed.cols(); ++j)
      b.quantity(prefix + "[" + labels[static_cast<size_t>(i)] + "|" + labels[static_cast<size_t>(j)] + "]",
                 computed(i, j), expected(i, j), provenance);
}

Matrix dw_outer(std::string_view a, std::string_view c) {
  return OperatorMatrix::outer(dw(a), dw(c)).entries();
}

CaseResult leftloc(int which, const CaseOptions& options) {
  CaseBuilder b("leftloc-" + std::to_string(which), options);
  const std::vector<Ket> k_left = left_subspace();

  auto record = [&](const NoLabelState& state, const std::string& tag, const Matrix& rho_expected, double e_expected,
                    const std::string& rho_src, const std::string& e_src) {
    const ReducedDM r = k_reduced_dm(state, k_left);
    add_matrix(b, "rho_L " + tag, r.matrix.entries(), rho_expected, rho_src);
    b.quantity("E_L " + tag, von_neumann_entropy(r.matrix), e_expected, e_src);
  };

  if (which == 1) {
    for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
      record(NoLabelState(NoLabelPair(dw("L,0"), dw("R,1"), eta)), "|L,0;R,1> " + eta_tag(eta), dw_outer("R,1", "R,1"),
             0.0, "published: left reduction of |L,0;R,1> is |R,1><R,1|",
             "published: vanishing left entanglement for |L,0;R,1>");
    }
  } else if (which == 2) {
    const NoLabelState s0(NoLabelPair(dw("L,0"), dw("L,0"), Exchange::Boson), kInvSqrt2);
    record(s0, "(1/sqrt2)|L,0;L,0>", dw_outer("L,0", "L,0"), 0.0, "published: left reduction is |L,0><L,0|",
           "published: vanishing left entanglement for the doubly occupied level");
    b.quantity("N of |L,0;L,0>", NoLabelPair(dw("L,0"), dw("L,0"), Exchange::Boson).squared_norm(), 2.0,
               "published: bosonic pair of equal constituents has squared norm 2");
    // Same structure written with the other internal level.
    const NoLabelState s1(NoLabelPair(dw("L,1"), dw("L,1"), Exchange::Boson));
    record(s1, "|L,1;L,1>", dw_outer("L,1", "L,1"), 0.0,
           "derived: relabelled internal level of the doubly occupied case",
           "published: vanishing left entanglement for the doubly occupied level");
  } else {
    for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
      const NoLabelState s(NoLabelPair(dw("L,0"), dw("L,1"), eta));
      record(s, "|L,0;L,1> " + eta_tag(eta), 0.5 * (dw_outer("L,0", "L,0") + dw_outer("L,1", "L,1")), 1.0,
             "published: left reduction of |L,0;L,1> is maximally mixed on the left levels",
             "published: |L,0;L,1> is maximally entangled by the left entropy");
      // Same state, opposite verdict from the commuting-observable point of view.
      b.verdict("|L,0;L,1> " + eta_tag(eta) + " vs algebras of P_L0^(1), P_L1^(1)",
                first_quantized_verdict(s, OperatorMatrix::projector(dw("L,0")), OperatorMatrix::projector(dw("L,1")), b),
                Verdict::SeparableWrt);
    }
  }
  return b.finish();
}

CaseResult leftloc_projector(int which, const CaseOptions& options) {
  CaseBuilder b("leftloc-projector-" + std::to_string(which), options);
  const OperatorMatrix p_plus = OperatorMatrix::projector((dw("L,0") + dw("L,1")) * kInvSqrt2);
  const OperatorMatrix p_minus = OperatorMatrix::projector((dw("L,0") - dw("L,1")) * kInvSqrt2);
  const OperatorMatrix p_0 = OperatorMatrix::projector(dw("L,0"));
  const OperatorMatrix p_1 = OperatorMatrix::projector(dw("L,1"));

  auto record = [&](const NoLabelPair& pair, const OperatorMatrix& o1, const OperatorMatrix& o2, const std::string& tag,
                    double joint, double product, double norm, Verdict expected, const std::string& src) {
    const NoLabelState s(pair);
    const PairExpectation ext = extended_pair_expectation(s, o1, o2);
    b.quantity("<O1^(1) O2^(1)> " + tag, ext.joint, joint, src);
    b.quantity("<O1^(1)><O2^(1)> " + tag, ext.product, product, src);
    b.quantity("N " + tag, pair.squared_norm(), norm, "published: squared norm of the pair");
    b.verdict(tag + " vs algebras of O1^(1), O2^(1)", first_quantized_verdict(s, o1, o2, b), expected);
  };

  if (which == 1) {
    for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
      record(NoLabelPair(dw("L,0"), dw("R,1"), eta), p_plus, p_minus, "|L,0;R,1> " + eta_tag(eta) + " P_L+, P_L-", 0.0,
             0.25, 1.0, Verdict::EntangledWrt,
             "published: P_L+/P_L- extended correlator 0 vs product of means 1/4 on |L,0;R,1>");
    }
  } else if (which == 2) {
    record(NoLabelPair(dw("L,1"), dw("L,1"), Exchange::Boson), p_plus, p_minus, "|L,1;L,1> eta=+1 P_L+, P_L-", 0.5,
           1.0, 2.0, Verdict::EntangledWrt,
           "published: P_L+/P_L- extended correlator 1/2 vs product of means 1 on |L,1;L,1>");
  } else {
    for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
      record(NoLabelPair(dw("L,0"), dw("L,1"), eta), p_0, p_1, "|L,0;L,1> " + eta_tag(eta) + " P_L0, P_L1", 1.0, 1.0,
             1.0, Verdict::SeparableWrt, "published: P_L0/P_L1 extended correlator 1 equals product of means 1");
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Registry

using Runner = std::function<CaseResult(const CaseOptions&)>;

struct Entry {
  CaseInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v = {
        {{"bell-particle-local", "sigma3 correlations of Psi+ under the particle-local bipartition",
          "Bell-state sigma3 correlator -1 vs product of marginals 0"},
         bell_particle_local},
        {{"product-vs-Apm", "|0>|0> separable for particle locality, entangled for (A+, A-)",
          "Phi+/Phi- projector correlator 0 vs product 1/4"},
         product_vs_apm},
        {{"bell-vs-Apm", "all four Bell states factorize over the Bell-projector subalgebras (A+, A-)",
          "Bell states not entangled with respect to (A+, A-)"},
         bell_vs_apm},
        {{"doublewell-number-state", "two-mode number state factorizes left/right polynomial expectations",
          "<k|PQ|k> = <k|P|k><k|Q|k> for left/right ladder polynomials"},
         doublewell_number_state},
        {{"doublewell-bogoliubov", "number state entangled with respect to Bogoliubov modes b+-",
          "|k> is a sum of b-number states"},
         doublewell_bogoliubov},
        {{"nolabel-factor-1", "pair factorization with O1, O2 projectors on the constituents",
          "both sides of the factorization identity vanish"},
         [](const CaseOptions& o) { return nolabel_factor(1, o); }},
        {{"nolabel-factor-2", "pair factorization with projectors on (phi1 +- phi2)/sqrt2",
          "left side -eta/2, right side 1/2"},
         [](const CaseOptions& o) { return nolabel_factor(2, o); }},
        {{"nolabel-factor-3", "pair factorization with projectors on (phi1 +- phi3)/sqrt2",
          "left side 0, right side 1/4"},
         [](const CaseOptions& o) { return nolabel_factor(3, o); }},
        {{"leftloc-1", "left-reduced density matrix of |L,0;R,1>", "rho_L = |R,1><R,1|, E_L = 0"},
         [](const CaseOptions& o) { return leftloc(1, o); }},
        {{"leftloc-2", "left-reduced density matrix of the doubly occupied level", "rho_L = |L,0><L,0|, E_L = 0"},
         [](const CaseOptions& o) { return leftloc(2, o); }},
        {{"leftloc-3", "left-reduced density matrix of |L,0;L,1> and its factorizing subalgebras",
          "rho_L maximally mixed, E_L = 1"},
         [](const CaseOptions& o) { return leftloc(3, o); }},
        {{"leftloc-projector-1", "P_L+/P_L- correlations on |L,0;R,1>", "extended correlator 0 vs product 1/4"},
         [](const CaseOptions& o) { return leftloc_projector(1, o); }},
        {{"leftloc-projector-2", "P_L+/P_L- correlations on |L,1;L,1>", "extended correlator 1/2 vs product 1"},
         [](const CaseOptions& o) { return leftloc_projector(2, o); }},
        {{"leftloc-projector-3", "P_L0/P_L1 correlations on |L,0;L,1>", "extended correlator 1 equals product 1"},
         [](const CaseOptions& o) { return leftloc_projector(3, o); }},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& c) { return a.info.id < c.info.id; });
    return v;
  }();
  return list;
}

}  // namespace

bool CaseResult::passed(double tolerance) const {
  return max_abs_deviation <= tolerance &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const VerdictRecord& v) { return v.matches(); });
}

const std::vector<CaseInfo>& case_registry() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_registered(std::string_view id) {
  const auto& list = entries();
  return std::any_of(list.begin(), list.end(), [&](const Entry& e) { return e.info.id == id; });
}

CaseResult run_case(std::string_view id, const CaseOptions& options) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e.run(options);
  }
  throw Error(ErrorCode::UnknownCase, "no case named '" + std::string(id) + "'");
}

std::vector<CaseResult> run_all(const CaseOptions& options) {
  std::vector<CaseResult> out;
  for (const auto& e : entries()) out.push_back(e.run(options));
  return out;
}

}  // namespace idpent
