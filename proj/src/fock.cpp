// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/fock.hpp"

#include "idpent/error.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace idpent {

namespace {

// Tuples of `modes` entries summing to `total`, first entry largest first.
void enumerate_sector(int modes, int total, int max_per_mode, Occupation& prefix, std::vector<Occupation>& out) {
  const int remaining_modes = modes - static_cast<int>(prefix.size());
  if (remaining_modes == 1) {
    if (total <= max_per_mode) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int n = std::min(total, max_per_mode); n >= 0; --n) {
    prefix.push_back(n);
    enumerate_sector(modes, total - n, max_per_mode, prefix, out);
    prefix.pop_back();
  }
}

std::string occupation_label(const Occupation& occ) {
  std::string s;
  for (size_t i = 0; i < occ.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(occ[i]);
  }
  return s;
}

Matrix combine(const FockSpace& space, const Ket& mode, bool create) {
  if (mode.dim() != space.mode_count()) throw Error(ErrorCode::Dim, "mode vector dimension differs from mode count");
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < space.mode_count(); ++i) {
    const cplx f = mode.amplitudes()(i);
    if (f == cplx(0.0)) continue;
    if (create) {
      m += f * space.raising(i);
    } else {
      m += std::conj(f) * space.raising(i).adjoint();
    }
  }
  return m;
}

}  // namespace

FockSpace FockSpace::build(Statistics statistics, int modes, int cutoff, std::vector<std::string> mode_labels) {
  if (modes < 1) throw Error(ErrorCode::Dim, "need at least one mode");
  if (cutoff < 1) throw Error(ErrorCode::Cutoff, "cutoff must be at least 1");
  if (statistics == Statistics::Fermion && cutoff > modes) {
    throw Error(ErrorCode::Cutoff, "fermionic cutoff " + std::to_string(cutoff) + " exceeds mode count " +
                                       std::to_string(modes));
  }
  if (mode_labels.empty()) {
    if (modes == 2) {
      mode_labels = {"L", "R"};
    } else {
      for (int i = 0; i < modes; ++i) mode_labels.push_back("m" + std::to_string(i));
    }
  }
  if (static_cast<int>(mode_labels.size()) != modes) throw Error(ErrorCode::Dim, "one label per mode required");

  FockSpace fs;
  fs.statistics_ = statistics;
  fs.cutoff_ = cutoff;
  fs.mode_space_ = HilbertSpace::make(std::move(mode_labels));

  const int max_per_mode = statistics == Statistics::Fermion ? 1 : cutoff;
  for (int n = 0; n <= cutoff; ++n) {
    Occupation prefix;
    enumerate_sector(modes, n, max_per_mode, prefix, fs.basis_);
  }
  std::vector<std::string> labels;
  labels.reserve(fs.basis_.size());
  for (size_t k = 0; k < fs.basis_.size(); ++k) {
    fs.index_.emplace(fs.basis_[k], static_cast<int>(k));
    labels.push_back(occupation_label(fs.basis_[k]));
  }
  fs.hilbert_ = HilbertSpace::make(std::move(labels));

  const int dim = fs.dim();
  for (int i = 0; i < modes; ++i) {
    Matrix up = Matrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      Occupation target = fs.basis_[static_cast<size_t>(col)];
      const int n = target[static_cast<size_t>(i)];
      target[static_cast<size_t>(i)] = n + 1;
      auto row = fs.index_of(target);
      if (!row) continue;  // truncated, or Pauli-blocked for fermions
      double amp = std::sqrt(static_cast<double>(n + 1));
      if (statistics == Statistics::Fermion) {
        const int string = std::accumulate(target.begin(), target.begin() + i, 0);
        amp = (string % 2 == 0) ? 1.0 : -1.0;
      }
      up(*row, col) = amp;
    }
    fs.raising_.push_back(std::move(up));
  }
  return fs;
}

std::optional<int> FockSpace::index_of(const Occupation& occupation) const {
  auto it = index_.find(occupation);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FockSpace::total_number(int index) const {
  const auto& occ = basis_.at(static_cast<size_t>(index));
  return std::accumulate(occ.begin(), occ.end(), 0);
}

std::vector<int> FockSpace::sectors_up_to(int max_total) const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (total_number(k) <= max_total) out.push_back(k);
  return out;
}

std::vector<int> FockSpace::exact_domain(int degree) const {
  if (statistics_ == Statistics::Fermion) return sectors_up_to(cutoff_);
  return sectors_up_to(cutoff_ - degree);
}

Ket FockSpace::vacuum() const { return Ket::basis(hilbert_, 0); }

Ket FockSpace::basis_ket(const Occupation& occupation) const {
  auto idx = index_of(occupation);
  if (!idx) throw Error(ErrorCode::Range, "occupation " + occupation_label(occupation) + " is not in the basis");
  return Ket::basis(hilbert_, *idx);
}

ModeOperator ModeOperator::adjoint() const {
  LadderKind k = kind;
  if (kind == LadderKind::Creation) k = LadderKind::Annihilation;
  else if (kind == LadderKind::Annihilation) k = LadderKind::Creation;
  return {k, matrix.adjoint(), mode_vector};
}

ModeOperator creation_op(const FockSpace& space, const Ket& mode) {
  return {LadderKind::Creation, OperatorMatrix(space.hilbert(), combine(space, mode, true)), mode};
}

ModeOperator annihilation_op(const FockSpace& space, const Ket& mode) {
  return {LadderKind::Annihilation, OperatorMatrix(space.hilbert(), combine(space, mode, false)), mode};
}

ModeOperator creation_op(const FockSpace& space, int mode) {
  return creation_op(space, Ket::basis(space.mode_space(), mode));
}

ModeOperator annihilation_op(const FockSpace& space, int mode) {
  return annihilation_op(space, Ket::basis(space.mode_space(), mode));
}

double check_ccr_car(const FockSpace& space, const Ket& f, const Ket& g, std::optional<int> max_sector) {
  const bool boson = space.statistics() == Statistics::Boson;
  const int sector = max_sector.value_or(boson ? space.cutoff() - 1 : space.cutoff());
  const std::vector<int> cols = space.sectors_up_to(sector);
  if (cols.empty()) return 0.0;

  const Matrix a_f = annihilation_op(space, f).matrix.entries();
  const Matrix a_g = annihilation_op(space, g).matrix.entries();
  const Matrix ad_f = creation_op(space, f).matrix.entries();
  const Matrix ad_g = creation_op(space, g).matrix.entries();
  auto bracket = [&](const Matrix& x, const Matrix& y) { return boson ? commutator(x, y) : anticommutator(x, y); };

  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  const Matrix residuals[] = {
      bracket(a_f, ad_g) - f.inner(g) * id,
      bracket(a_f, a_g),
      bracket(ad_f, ad_g),
  };
  double worst = 0.0;
  for (const Matrix& r : residuals) {
    Matrix restricted(r.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) restricted.col(static_cast<Eigen::Index>(c)) = r.col(cols[c]);
    worst = std::max(worst, operator_norm(restricted));
  }
  return worst;
}

Ket number_state(const FockSpace& space, int k, int total) {
  if (space.mode_count() != 2) throw Error(ErrorCode::Dim, "number states are defined on two-mode spaces");
  if (k < 0 || k > total || total > space.cutoff()) {
    throw Error(ErrorCode::Range, "need 0 <= k <= N <= cutoff (k=" + std::to_string(k) +
                                      ", N=" + std::to_string(total) + ")");
  }
  auto idx = space.index_of({k, total - k});
  if (!idx) throw Error(ErrorCode::Range, "occupation not representable");
  return Ket::basis(space.hilbert(), *idx);
}

std::pair<ModeOperator, ModeOperator> bogoliubov_modes(const FockSpace& space) {
  if (space.mode_count() != 2) throw Error(ErrorCode::Dim, "Bogoliubov modes need exactly two modes");
  const double r = 1.0 / std::sqrt(2.0);
  Vector plus(2), minus(2);
  plus << r, r;
  minus << r, -r;
  return {annihilation_op(space, Ket(space.mode_space(), plus)), annihilation_op(space, Ket(space.mode_space(), minus))};
}

// ---------------------------------------------------------------------------
// LadderPolynomial

LadderPolynomial::LadderPolynomial(int degree, std::vector<cplx> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
  if (degree < 0) throw Error(ErrorCode::Range, "polynomial degree must be nonnegative");
  if (static_cast<int>(coefficients_.size()) != word_count(degree)) {
    throw Error(ErrorCode::Dim, "polynomial needs one coefficient per word");
  }
}

int LadderPolynomial::word_count(int degree) { return (1 << (degree + 1)) - 1; }

LadderPolynomial LadderPolynomial::random(int degree, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> c(static_cast<size_t>(word_count(degree)));
  for (auto& x : c) {
    const double re = normal(rng);
    const double im = normal(rng);
    x = {re, im};
  }
  return {degree, std::move(c)};
}

Matrix LadderPolynomial::evaluate(const ModeOperator& annihilator) const {
  const Matrix& a = annihilator.matrix.entries();
  const Matrix ad = a.adjoint();
  const Eigen::Index n = a.rows();

  Matrix result = Matrix::Zero(n, n);
  std::vector<Matrix> level{Matrix::Identity(n, n)};
  size_t c = 0;
  for (int len = 0; len <= degree_; ++len) {
    if (len > 0) {
      std::vector<Matrix> next;
      next.reserve(level.size() * 2);
      // Appending a letter on the right keeps lexicographic order over words.
      for (const Matrix& w : level) {
        next.push_back(w * a);
        next.push_back(w * ad);
      }
      level = std::move(next);
    }
    for (const Matrix& w : level) result += coefficients_[c++] * w;
  }
  return result;
}

}  // namespace idpent
