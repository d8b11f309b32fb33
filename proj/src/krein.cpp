// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/krein.hpp"

#include <algorithm>
#include <cctype>

#include "fockrein/error.hpp"

namespace fockrein {

KreinSpace::KreinSpace(std::vector<int> signature) : signature_(std::move(signature)) {
  if (signature_.empty()) throw UsageError("Krein space needs dimension >= 1");
  for (int s : signature_) {
    if (s != 1 && s != -1) throw UsageError("signature entries must be +1 or -1");
  }
}

KreinSpace KreinSpace::parse(std::string_view signs) {
  std::vector<int> sig;
  for (char c : signs) {
    if (c == '+') {
      sig.push_back(1);
    } else if (c == '-') {
      sig.push_back(-1);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw UsageError(std::string("invalid signature character '") + c + "'");
    }
  }
  return KreinSpace(std::move(sig));
}

KreinSpace KreinSpace::with_counts(int p, int q) {
  if (p < 0 || q < 0) throw UsageError("negative signature count");
  std::vector<int> sig(static_cast<std::size_t>(p), 1);
  sig.insert(sig.end(), static_cast<std::size_t>(q), -1);
  return KreinSpace(std::move(sig));
}

Eigen::VectorXd KreinSpace::signs() const {
  Eigen::VectorXd s(dim());
  for (int i = 0; i < dim(); ++i) s(i) = signature_[static_cast<std::size_t>(i)];
  return s;
}

int KreinSpace::positive_count() const noexcept {
  return static_cast<int>(std::count(signature_.begin(), signature_.end(), 1));
}

int KreinSpace::negative_count() const noexcept { return dim() - positive_count(); }

KreinSpace KreinSpace::negated() const {
  std::vector<int> sig = signature_;
  for (int& s : sig) s = -s;
  return KreinSpace(std::move(sig));
}

std::string KreinSpace::to_string() const {
  std::string out;
  for (int s : signature_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

KreinSpace direct_sum(const KreinSpace& first, const KreinSpace& second) {
  std::vector<int> sig = first.signature();
  sig.insert(sig.end(), second.signature().begin(), second.signature().end());
  return KreinSpace(std::move(sig));
}

std::string to_string(Linearity l) {
  return l == Linearity::linear ? "linear" : "conjugate-linear";
}

KOperator::KOperator(CMatrix matrix, Linearity linearity)
    : matrix_(std::move(matrix)), linearity_(linearity) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw UsageError("operator matrix must be square and non-empty");
  }
}

KOperator KOperator::identity(int dim) { return linear(CMatrix::Identity(dim, dim)); }

KOperator KOperator::zero(int dim, Linearity linearity) {
  return {CMatrix::Zero(dim, dim), linearity};
}

KVector KOperator::apply(const KVector& v) const {
  if (v.size() != matrix_.cols()) throw UsageError("operator/vector dimension mismatch");
  if (is_linear()) return matrix_ * v;
  return matrix_ * v.conjugate();
}

KOperator operator*(Complex c, const KOperator& a) { return {c * a.matrix_, a.linearity_}; }

KOperator operator+(const KOperator& a, const KOperator& b) {
  if (a.linearity_ != b.linearity_) throw UsageError("cannot add operators of different linearity");
  if (a.dim() != b.dim()) throw UsageError("operator dimension mismatch");
  return {a.matrix_ + b.matrix_, a.linearity_};
}

KOperator operator-(const KOperator& a, const KOperator& b) { return a + (-b); }

KOperator operator-(const KOperator& a) { return {-a.matrix_, a.linearity_}; }

KOperator compose(const KOperator& a, const KOperator& b) {
  if (a.dim() != b.dim()) throw UsageError("operator dimension mismatch");
  // a(b(v)): a conjugate-linear sees conj(B·v) or conj(B·conj v).
  if (a.is_linear()) return {a.matrix() * b.matrix(), b.linearity()};
  const Linearity l = b.is_linear() ? Linearity::conjugate_linear : Linearity::linear;
  return {a.matrix() * b.matrix().conjugate(), l};
}

KOperator direct_sum(const KOperator& a, const KOperator& b) {
  if (a.linearity() != b.linearity()) throw UsageError("direct sum needs equal linearity");
  const int n = a.dim() + b.dim();
  CMatrix m = CMatrix::Zero(n, n);
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return {std::move(m), a.linearity()};
}

void require_dim(const KreinSpace& space, const KVector& v, const char* what) {
  if (v.size() != space.dim()) {
    throw UsageError(std::string(what) + ": vector dimension does not match the space");
  }
}

void require_dim(const KreinSpace& space, const KOperator& op, const char* what) {
  if (op.dim() != space.dim()) {
    throw UsageError(std::string(what) + ": operator dimension does not match the space");
  }
}

Complex inner(const KreinSpace& space, const KVector& v, const KVector& w) {
  require_dim(space, v, "inner");
  require_dim(space, w, "inner");
  Complex acc = 0.0;
  for (int i = 0; i < space.dim(); ++i) acc += double(space.sign(i)) * std::conj(v(i)) * w(i);
  return acc;
}

double hilbert_norm(const KVector& v) { return v.norm(); }

Complex trace(const KreinSpace& space, const KOperator& op) {
  require_dim(space, op, "trace");
  if (!op.is_linear()) throw UsageError("trace is defined for linear operators only");
  // s_i {ζ_i, λζ_i} = s_i s_i M_ii
  return op.matrix().trace();
}

KOperator adjoint(const KreinSpace& space, const KOperator& op) {
  require_dim(space, op, "adjoint");
  if (!op.is_linear()) throw UsageError("adjoint is defined for linear operators only");
  const CVector s = space.signs().cast<Complex>();
  return KOperator::linear(s.asDiagonal() * op.matrix().adjoint() * s.asDiagonal());
}

namespace {

double scale_of(const CMatrix& m) { return std::max(1.0, m.squaredNorm()); }

bool near(const CMatrix& a, const CMatrix& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

bool is_conj_antisymmetric(const KreinSpace& space, const KOperator& op, double tol) {
  require_dim(space, op, "is_conj_antisymmetric");
  if (op.is_linear()) return false;
  const CMatrix sm = space.signs().cast<Complex>().asDiagonal() * op.matrix();
  return near(sm, -sm.transpose(), tol * std::max(1.0, op.matrix().norm()));
}

StructuralFlags structural_predicates(const KreinSpace& space, const KOperator& op, double tol) {
  require_dim(space, op, "structural_predicates");
  const int d = space.dim();
  const CMatrix& m = op.matrix();
  const CMatrix s = space.signs().cast<Complex>().asDiagonal();
  const double t2 = tol * scale_of(m);

  StructuralFlags f;
  // Re{Av, Aw} = Re(v^H G w) with G = M^H S M (or its conjugate); either way the
  // criterion is M^H S M = ±S.
  const CMatrix gram = m.adjoint() * s * m;
  f.real_isometry = near(gram, s, t2);
  f.real_anti_isometry = near(gram, -s, t2);

  const CMatrix square = op.is_linear() ? CMatrix(m * m) : CMatrix(m * m.conjugate());
  f.involution = near(square, CMatrix::Identity(d, d), t2);

  const CMatrix sm = s * m;
  f.real_antisymmetric = op.is_linear() ? near(sm, -sm.adjoint(), tol * std::max(1.0, m.norm()))
                                        : near(sm, -sm.transpose(), tol * std::max(1.0, m.norm()));

  double same_block = 0.0;
  double cross_block = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double a = std::abs(m(i, j));
      if (space.sign(i) == space.sign(j)) {
        same_block = std::max(same_block, a);
      } else {
        cross_block = std::max(cross_block, a);
      }
    }
  }
  const double bt = tol * std::max(1.0, m.norm());
  f.adapted = (f.real_isometry && cross_block <= bt) || (f.real_anti_isometry && same_block <= bt);
  return f;
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const KOperator& op) { return operator_norm(op.matrix()); }

KOperator scale_i(const KOperator& op) {
  if (op.is_linear()) throw UsageError("scale_i expects a conjugate-linear operator");
  return Complex(0.0, 1.0) * op;
}

std::pair<KOperator, KOperator> split_by_decomposition(const KreinSpace& space,
                                                       const KOperator& op) {
  require_dim(space, op, "split_by_decomposition");
  const int d = space.dim();
  CMatrix preserving = CMatrix::Zero(d, d);
  CMatrix interchanging = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      (space.sign(i) == space.sign(j) ? preserving : interchanging)(i, j) = op.matrix()(i, j);
    }
  }
  return {KOperator(preserving, op.linearity()), KOperator(interchanging, op.linearity())};
}

}  // namespace fockrein
