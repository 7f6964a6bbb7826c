// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/verify.hpp"

#include "idpent/fock.hpp"
#include "idpent/hilbert.hpp"
#include "idpent/nolabel.hpp"
#include "idpent/random.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace idpent {

namespace {

class Tracker {
 public:
  Tracker(std::string name, double bound, const VerifyOptions& options) {
    check_.name = std::move(name);
    check_.threshold = std::min(bound, options.tolerance);
  }

  void record(double deviation, const std::function<std::string()>& describe) {
    if (check_.trials++ == 0 || deviation > check_.max_deviation) {
      check_.max_deviation = deviation;
      check_.witness = describe();
    }
  }

  PropertyCheck finish() {
    check_.passed = check_.max_deviation <= check_.threshold;
    return check_;
  }

 private:
  PropertyCheck check_;
};

std::string vec_str(const Vector& v) {
  std::ostringstream out;
  out.precision(6);
  out << "[";
  for (int i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v(i).real() << (v(i).imag() < 0 ? "" : "+") << v(i).imag() << "i";
  out << "]";
  return out.str();
}

double mat_dev(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Exchange random_eta(std::mt19937_64& rng) { return (rng() & 1U) ? Exchange::Boson : Exchange::Fermion; }

std::string eta_str(Exchange eta) { return eta == Exchange::Boson ? "eta=+1" : "eta=-1"; }

PropertyCheck ladder_relations(Statistics stats, int modes, int cutoff, const char* name, const VerifyOptions& options,
                               std::mt19937_64& rng) {
  Tracker t(name, 1e-10, options);
  const FockSpace fs = FockSpace::build(stats, modes, cutoff);
  const SpacePtr& h = fs.mode_space();
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      t.record(check_ccr_car(fs, Ket::basis(h, i), Ket::basis(h, j)),
               [&] { return "modes e" + std::to_string(i) + ", e" + std::to_string(j); });
    }
  }
  for (int s = 0; s < 20; ++s) {
    const Ket f = random_ket(h, rng);
    const Ket g = random_ket(h, rng);
    t.record(check_ccr_car(fs, f, g), [&] { return "f=" + vec_str(f.amplitudes()) + " g=" + vec_str(g.amplitudes()); });
  }
  return t.finish();
}

NoLabelPair random_pair(int dim, std::mt19937_64& rng, Exchange eta) {
  const SpacePtr h = HilbertSpace::numbered(dim);
  const Ket a = random_ket(h, rng);
  const Ket b = random_ket(h, rng);
  return NoLabelPair(a, b, eta);
}

std::string pair_str(const NoLabelPair& p) {
  return eta_str(p.eta()) + " phi1=" + vec_str(p.phi1().amplitudes()) + " phi2=" + vec_str(p.phi2().amplitudes());
}

int random_dim(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

PropertyCheck embedding(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("embedding: nl_inner vs first-quantized inner (200 pairs)", 1e-10, options);
  for (int s = 0; s < 200; ++s) {
    const int d = random_dim(rng, 2, 4);
    const Exchange eta = random_eta(rng);
    const NoLabelPair p = random_pair(d, rng, eta);
    const NoLabelPair q = random_pair(d, rng, eta);
    const cplx nl = nl_inner(p, q);
    const Ket fp = to_first_quantized(p);
    const Ket fq = to_first_quantized(q);
    t.record(std::abs(nl - fp.amplitudes().dot(fq.amplitudes())), [&] { return pair_str(p) + " vs " + pair_str(q); });
  }
  return t.finish();
}

PropertyCheck exchange_symmetry(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("exchange: |phi1,phi2> = eta |phi2,phi1>", 1e-10, options);
  for (int s = 0; s < 100; ++s) {
    const int d = random_dim(rng, 2, 4);
    const Exchange eta = random_eta(rng);
    const NoLabelPair p = random_pair(d, rng, eta);
    const NoLabelPair swapped(p.phi2(), p.phi1(), eta);
    const double e = eta_value(eta);
    const Vector diff = to_first_quantized(p).amplitudes() - e * to_first_quantized(swapped).amplitudes();
    NoLabelState combo(p);
    combo.add(-e, swapped);
    const double dev = std::max(diff.norm(), std::sqrt(std::max(0.0, combo.squared_norm())));
    t.record(dev, [&] { return pair_str(p); });
  }
  return t.finish();
}

PropertyCheck basis_independence(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("basis independence: E_K under 20 rotations of the K basis", 1e-9, options);
  const int d = 4;
  const SpacePtr h = HilbertSpace::numbered(d);
  const int trials = 5;
  for (int s = 0; s < trials; ++s) {
    const Exchange eta = random_eta(rng);
    const NoLabelPair p(random_ket(h, rng), random_ket(h, rng), eta);
    const std::vector<Ket> k = {Ket::basis(h, 0), Ket::basis(h, 1)};
    const ReducedDM ref = k_reduced_dm(p, k);
    const double e_ref = von_neumann_entropy(ref.matrix);
    for (int r = 0; r < 20; ++r) {
      const Matrix u = random_unitary(2, rng);
      std::vector<Ket> rotated;
      for (int c = 0; c < 2; ++c) rotated.push_back(k[0] * u(0, c) + k[1] * u(1, c));
      const ReducedDM rot = k_reduced_dm(p, rotated);
      const double dev = std::max(std::abs(von_neumann_entropy(rot.matrix) - e_ref),
                                  mat_dev(rot.matrix.entries(), ref.matrix.entries()));
      t.record(dev, [&] { return pair_str(p) + " rotation " + std::to_string(r); });
    }
  }
  return t.finish();
}

PropertyCheck schmidt_reconstruction(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("Schmidt reconstruction (200 kets, d <= 4)", 1e-10, options);
  for (int s = 0; s < 200; ++s) {
    const int d1 = random_dim(rng, 1, 4);
    const int d2 = random_dim(rng, 1, 4);
    const SpacePtr product = HilbertSpace::tensor(HilbertSpace::numbered(d1), HilbertSpace::numbered(d2));
    const Ket psi = random_ket(product, rng);
    const SchmidtForm f = schmidt_decompose(psi, d1, d2);
    t.record((f.reconstruct(product).amplitudes() - psi.amplitudes()).norm(), [&] {
      return std::to_string(d1) + "x" + std::to_string(d2) + " " + vec_str(psi.amplitudes());
    });
  }
  return t.finish();
}

PropertyCheck full_space_consistency(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("K = H consistency (100 pairs per statistics)", 1e-10, options);
  for (Exchange eta : {Exchange::Boson, Exchange::Fermion}) {
    for (int s = 0; s < 100; ++s) {
      const int d = random_dim(rng, 2, 4);
      const SpacePtr h = HilbertSpace::numbered(d);
      const NoLabelPair p(random_ket(h, rng), random_ket(h, rng), eta);
      std::vector<Ket> full;
      for (int i = 0; i < d; ++i) full.push_back(Ket::basis(h, i));
      const ReducedDM rho = k_reduced_dm(p, full);
      const Matrix closed = full_reduced_dm_closed_form(p).entries();
      const Ket fq = to_first_quantized(p).normalized();
      const Matrix pt = partial_trace(OperatorMatrix::projector(fq), d, d, Keep::First).entries();

      const Matrix a = random_density(d, rng);
      const OperatorMatrix obs(h, a);
      const double ext = expectation_extended(p, obs);
      const double red = expectation_reduced(rho, obs);
      const double dev = std::max({mat_dev(rho.matrix.entries(), closed), mat_dev(rho.matrix.entries(), pt),
                                   std::abs(ext - 2.0 * red), std::abs(ext - expectation_extended_closed_form(p, obs)),
                                   std::abs(red - expectation_reduced_closed_form(p, obs, projector_onto(full)))});
      t.record(dev, [&] { return pair_str(p); });
    }
  }
  return t.finish();
}

PropertyCheck entropy_invariance(const VerifyOptions& options, std::mt19937_64& rng) {
  Tracker t("entropy unitary invariance", 1e-9, options);
  for (int s = 0; s < 100; ++s) {
    const int d = random_dim(rng, 2, 6);
    const SpacePtr h = HilbertSpace::numbered(d);
    const Matrix rho = random_density(d, rng);
    const Matrix u = random_unitary(d, rng);
    const double e1 = von_neumann_entropy(OperatorMatrix(h, rho));
    const double e2 = von_neumann_entropy(OperatorMatrix(h, u * rho * u.adjoint()));
    t.record(std::abs(e1 - e2), [&] { return "d=" + std::to_string(d) + " trial " + std::to_string(s); });
  }
  return t.finish();
}

}  // namespace

std::vector<PropertyCheck> run_property_suites(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<PropertyCheck> out;
  out.push_back(ladder_relations(Statistics::Boson, 2, 6, "CCR: boson, 2 modes, cutoff 6, untruncated sectors", options, rng));
  out.push_back(ladder_relations(Statistics::Fermion, 4, 4, "CAR: fermion, 4 modes, full space", options, rng));
  out.push_back(embedding(options, rng));
  out.push_back(exchange_symmetry(options, rng));
  out.push_back(basis_independence(options, rng));
  out.push_back(schmidt_reconstruction(options, rng));
  out.push_back(full_space_consistency(options, rng));
  out.push_back(entropy_invariance(options, rng));
  return out;
}

std::string format_checks(const std::vector<PropertyCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    char line[512];
    std::snprintf(line, sizeof line, "%-4s  %-58s  max_dev %-10.3g  bound %-8.1g  trials %d\n", c.passed ? "ok" : "FAIL",
                  c.name.c_str(), c.max_deviation, c.threshold, c.trials);
    out << line;
    if (!c.passed) out << "      witness: " << c.witness << "\n";
  }
  return out.str();
}

}  // namespace idpent
