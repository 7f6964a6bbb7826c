// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/algebra.hpp"
#include "idpent/cases.hpp"
#include "idpent/error.hpp"
#include "idpent/fock.hpp"
#include "idpent/hilbert.hpp"
#include "idpent/nolabel.hpp"
#include "idpent/report.hpp"
#include "idpent/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace idpent;

namespace {

SpacePtr space_of(Eigen::Index dim) { return HilbertSpace::numbered(static_cast<int>(dim)); }

Ket ket(const Vector& v) { return {space_of(v.size()), v}; }

OperatorMatrix op(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Dim, "operator must be square");
  return {space_of(m.rows()), m};
}

Exchange exchange(int eta) {
  if (eta == 1) return Exchange::Boson;
  if (eta == -1) return Exchange::Fermion;
  throw Error(ErrorCode::Eta, "eta must be +1 or -1");
}

Statistics statistics(const std::string& s) {
  if (s == "boson") return Statistics::Boson;
  if (s == "fermion") return Statistics::Fermion;
  throw Error(ErrorCode::Range, "statistics must be 'boson' or 'fermion'");
}

NoLabelPair pair(const Vector& phi1, const Vector& phi2, int eta) {
  const SpacePtr h = space_of(phi1.size());
  if (phi2.size() != phi1.size()) throw Error(ErrorCode::Dim, "constituents differ in dimension");
  return {Ket(h, phi1), Ket(h, phi2), exchange(eta)};
}

std::vector<Ket> kets_on(const std::vector<Vector>& basis, const SpacePtr& h) {
  std::vector<Ket> out;
  for (const auto& v : basis) out.emplace_back(h, v);
  return out;
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<OperatorMatrix> ops(const std::vector<Matrix>& ms) {
  std::vector<OperatorMatrix> out;
  for (const auto& m : ms) out.push_back(op(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separability and entanglement checks for two identical particles";

  static py::exception<Error> error(m, "IdpentError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("TOLERANCE") = kTolerance;

  // hilbert
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("pauli", &pauli, py::arg("k"));
  m.def("bell_psi", [](int sign) { return Vector(bell_psi(sign).amplitudes()); }, py::arg("sign"));
  m.def("bell_phi", [](int sign) { return Vector(bell_phi(sign).amplitudes()); }, py::arg("sign"));
  m.def(
      "schmidt_coefficients",
      [](const Vector& state, int d1, int d2) { return schmidt_decompose(ket(state), d1, d2).coefficients; },
      py::arg("state"), py::arg("d1"), py::arg("d2"));
  m.def(
      "is_separable_pure",
      [](const Vector& state, int d1, int d2, double tol) { return is_separable_pure(ket(state), d1, d2, tol); },
      py::arg("state"), py::arg("d1"), py::arg("d2"), py::arg("tol") = kTolerance);
  m.def(
      "partial_trace",
      [](const Matrix& rho, int d1, int d2, const std::string& keep) {
        if (keep != "first" && keep != "second") throw Error(ErrorCode::Range, "keep must be 'first' or 'second'");
        return Matrix(partial_trace(op(rho), d1, d2, keep == "first" ? Keep::First : Keep::Second).entries());
      },
      py::arg("rho"), py::arg("d1"), py::arg("d2"), py::arg("keep") = "first");
  m.def("von_neumann_entropy", [](const Matrix& rho) { return von_neumann_entropy(op(rho)); }, py::arg("rho"));
  m.def("expectation", [](const Vector& s, const Matrix& a) { return expectation(ket(s), op(a)); }, py::arg("state"),
        py::arg("op"));

  // fock
  py::class_<FockSpace>(m, "FockSpace")
      .def(py::init([](const std::string& stats, int modes, int cutoff) {
             return FockSpace::build(statistics(stats), modes, cutoff);
           }),
           py::arg("statistics"), py::arg("modes"), py::arg("cutoff"))
      .def_property_readonly("dim", &FockSpace::dim)
      .def_property_readonly("cutoff", &FockSpace::cutoff)
      .def_property_readonly("mode_count", &FockSpace::mode_count)
      .def_property_readonly("basis", &FockSpace::basis)
      .def("exact_domain", &FockSpace::exact_domain, py::arg("degree"))
      .def("creation", [](const FockSpace& fs, const Vector& f) {
             return Matrix(creation_op(fs, Ket(fs.mode_space(), f)).matrix.entries());
           }, py::arg("mode"))
      .def("annihilation", [](const FockSpace& fs, const Vector& f) {
             return Matrix(annihilation_op(fs, Ket(fs.mode_space(), f)).matrix.entries());
           }, py::arg("mode"))
      .def("number_state", [](const FockSpace& fs, int k, int n) { return Vector(number_state(fs, k, n).amplitudes()); },
           py::arg("k"), py::arg("total"))
      .def("check_ccr_car", [](const FockSpace& fs, const Vector& f, const Vector& g) {
             return check_ccr_car(fs, Ket(fs.mode_space(), f), Ket(fs.mode_space(), g));
           }, py::arg("f"), py::arg("g"))
      .def("bogoliubov_modes", [](const FockSpace& fs) {
        const auto [p, q] = bogoliubov_modes(fs);
        return py::make_tuple(Matrix(p.matrix.entries()), Matrix(q.matrix.entries()));
      });

  // algebra
  m.def(
      "factorization_test",
      [](const Vector& state, const std::vector<Matrix>& gens_a, const std::vector<Matrix>& gens_b, int degree,
         double tol, std::uint64_t seed, std::vector<int> domain) {
        const Subalgebra a = Subalgebra::generate(ops(gens_a), degree, "A");
        const Subalgebra b = Subalgebra::generate(ops(gens_b), degree, "B");
        FactorizationOptions o;
        o.tol = tol;
        o.seed = seed;
        o.domain = std::move(domain);
        const FactorizationReport r = factorization_test(ket(state), a, b, o);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["max_violation"] = r.max_violation;
        d["max_monomial_violation"] = r.max_monomial_violation;
        d["max_sampled_violation"] = r.max_sampled_violation;
        d["monomials"] = py::make_tuple(a.monomials().size(), b.monomials().size());
        d["note"] = r.note;
        return d;
      },
      py::arg("state"), py::arg("generators_a"), py::arg("generators_b"), py::arg("degree") = 4,
      py::arg("tol") = kTolerance, py::arg("seed") = 42, py::arg("domain") = std::vector<int>{});

  // nolabel
  m.def(
      "nl_inner",
      [](const Vector& a1, const Vector& a2, const Vector& b1, const Vector& b2, int eta) {
        return nl_inner(pair(a1, a2, eta), pair(b1, b2, eta));
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("psi1"), py::arg("psi2"), py::arg("eta"));
  m.def(
      "to_first_quantized",
      [](const Vector& a, const Vector& b, int eta) { return Vector(to_first_quantized(pair(a, b, eta)).amplitudes()); },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"));
  m.def(
      "k_reduced_dm",
      [](const Vector& a, const Vector& b, int eta, const std::vector<Vector>& k_basis) {
        const NoLabelPair p = pair(a, b, eta);
        return Matrix(k_reduced_dm(p, kets_on(k_basis, p.space_ptr())).matrix.entries());
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"), py::arg("k_basis"));
  m.def(
      "entanglement_entropy",
      [](const Vector& a, const Vector& b, int eta, const std::vector<Vector>& k_basis) {
        const NoLabelPair p = pair(a, b, eta);
        return entanglement_entropy(p, kets_on(k_basis, p.space_ptr()));
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"), py::arg("k_basis"));
  m.def(
      "expectation_extended",
      [](const Vector& a, const Vector& b, int eta, const Matrix& o) {
        const NoLabelPair p = pair(a, b, eta);
        return expectation_extended(p, OperatorMatrix(p.space_ptr(), o));
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"), py::arg("op"));
  m.def(
      "extended_pair_expectation",
      [](const Vector& a, const Vector& b, int eta, const Matrix& o1, const Matrix& o2) {
        const NoLabelPair p = pair(a, b, eta);
        const PairExpectation e =
            extended_pair_expectation(p, OperatorMatrix(p.space_ptr(), o1), OperatorMatrix(p.space_ptr(), o2));
        return py::make_tuple(e.joint, e.product);
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"), py::arg("o1"), py::arg("o2"));
  m.def(
      "factorization_identity_sides",
      [](const Vector& a, const Vector& b, int eta, const Matrix& o1, const Matrix& o2) {
        const NoLabelPair p = pair(a, b, eta);
        const FactorizationSides s =
            factorization_identity_sides(p, OperatorMatrix(p.space_ptr(), o1), OperatorMatrix(p.space_ptr(), o2));
        return py::make_tuple(s.lhs, s.rhs);
      },
      py::arg("phi1"), py::arg("phi2"), py::arg("eta"), py::arg("o1"), py::arg("o2"));

  // cases and property suites
  m.def("list_cases", [] {
    py::list out;
    for (const auto& c : case_registry()) out.append(py::make_tuple(c.id, c.description, c.anchor));
    return out;
  });
  m.def(
      "run_case",
      [](const std::string& id, std::uint64_t seed) { return to_python(nlohmann::json(run_case(id, {kTolerance, seed}))); },
      py::arg("case_id"), py::arg("seed") = 42);
  m.def(
      "run_all", [](std::uint64_t seed) { return to_python(nlohmann::json(run_all({kTolerance, seed}))); },
      py::arg("seed") = 42);
  m.def(
      "verify",
      [](double tolerance, std::uint64_t seed) {
        py::list out;
        for (const auto& c : run_property_suites({tolerance, seed})) {
          py::dict d;
          d["name"] = c.name;
          d["max_deviation"] = c.max_deviation;
          d["threshold"] = c.threshold;
          d["passed"] = c.passed;
          d["trials"] = c.trials;
          d["witness"] = c.witness;
          out.append(d);
        }
        return out;
      },
      py::arg("tolerance") = kTolerance, py::arg("seed") = 42);
}
