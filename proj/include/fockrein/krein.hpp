// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file krein.hpp
 * @brief Finite-dimensional strict Krein spaces and their (conjugate-)linear operators.
 *
 * A space is fixed by its signature s_i = {ζ_i, ζ_i} = ±1; the adapted orthonormal
 * basis is always the coordinate basis. The inner product is conjugate-linear in
 * the first slot:
 *
 *     {v, w} = Σ_i s_i conj(v_i) w_i
 *
 * A conjugate-linear operator with matrix M acts as v ↦ M·conj(v). Under this
 * storage rule the conjugate anti-symmetry {v, Λw} = −{w, Λv} is equivalent to
 * S·M being a (complex) antisymmetric matrix, S = diag(s).
 */

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fockrein {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Coordinates of a vector in the adapted basis.
using KVector = CVector;

inline constexpr double kDefaultTolerance = 1e-9;

class KreinSpace {
 public:
  /// Entries must be +1 or -1; at least one entry.
  explicit KreinSpace(std::vector<int> signature);

  /// Parses a sign string such as "++--" or "+ - + -" (whitespace ignored).
  static KreinSpace parse(std::string_view signs);

  /// `p` positive directions followed by `q` negative ones.
  static KreinSpace with_counts(int p, int q);

  int dim() const noexcept { return static_cast<int>(signature_.size()); }
  int sign(int i) const { return signature_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& signature() const noexcept { return signature_; }

  /// Diagonal of S as reals.
  Eigen::VectorXd signs() const;

  int positive_count() const noexcept;
  int negative_count() const noexcept;
  bool balanced() const noexcept { return positive_count() == negative_count(); }

  /// Same coordinates, signature flipped.
  KreinSpace negated() const;

  std::string to_string() const;

  friend bool operator==(const KreinSpace&, const KreinSpace&) = default;

 private:
  std::vector<int> signature_;
};

/// Block signature (first, second); coordinates of `first` come first.
KreinSpace direct_sum(const KreinSpace& first, const KreinSpace& second);

enum class Linearity { linear, conjugate_linear };

std::string to_string(Linearity l);

class KOperator {
 public:
  KOperator(CMatrix matrix, Linearity linearity);

  static KOperator linear(CMatrix matrix) { return {std::move(matrix), Linearity::linear}; }
  static KOperator conjugate_linear(CMatrix matrix) {
    return {std::move(matrix), Linearity::conjugate_linear};
  }
  static KOperator identity(int dim);
  static KOperator zero(int dim, Linearity linearity);

  const CMatrix& matrix() const noexcept { return matrix_; }
  Linearity linearity() const noexcept { return linearity_; }
  bool is_linear() const noexcept { return linearity_ == Linearity::linear; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

  KVector apply(const KVector& v) const;
  KVector operator()(const KVector& v) const { return apply(v); }

  /// Pointwise scaling of the output, (cA)(v) = c·A(v).
  friend KOperator operator*(Complex c, const KOperator& a);
  friend KOperator operator+(const KOperator& a, const KOperator& b);
  friend KOperator operator-(const KOperator& a, const KOperator& b);
  friend KOperator operator-(const KOperator& a);

 private:
  CMatrix matrix_;
  Linearity linearity_;
};

/// a∘b. Two conjugate-linear factors give a linear map with matrix A·conj(B).
KOperator compose(const KOperator& a, const KOperator& b);
inline KOperator operator*(const KOperator& a, const KOperator& b) { return compose(a, b); }

/// Block-diagonal extension a ⊕ b; linearities must agree.
KOperator direct_sum(const KOperator& a, const KOperator& b);

Complex inner(const KreinSpace& space, const KVector& v, const KVector& w);

/// Hilbertized norm for the fixed decomposition.
double hilbert_norm(const KVector& v);

/// tr(λ) = Σ s_i {ζ_i, λζ_i}; linear operators only.
Complex trace(const KreinSpace& space, const KOperator& op);

/// Krein adjoint b* with {b*v, w} = {v, bw}; linear operators only.
KOperator adjoint(const KreinSpace& space, const KOperator& op);

bool is_conj_antisymmetric(const KreinSpace& space, const KOperator& op,
                           double tol = kDefaultTolerance);

struct StructuralFlags {
  bool real_isometry = false;
  bool real_anti_isometry = false;
  bool involution = false;
  bool adapted = false;
  bool real_antisymmetric = false;
};

StructuralFlags structural_predicates(const KreinSpace& space, const KOperator& op,
                                      double tol = kDefaultTolerance);

/// Largest singular value; the same for both linearities.
double operator_norm(const KOperator& op);
double operator_norm(const CMatrix& m);

/// (iΛ)(v) = i·Λ(v); conjugate-linear input only.
KOperator scale_i(const KOperator& op);

/// Splits op = preserving + interchanging relative to the signature blocks.
std::pair<KOperator, KOperator> split_by_decomposition(const KreinSpace& space,
                                                       const KOperator& op);

/// Throws UsageError unless `v` has the space's dimension.
void require_dim(const KreinSpace& space, const KVector& v, const char* what);
void require_dim(const KreinSpace& space, const KOperator& op, const char* what);

}  // namespace fockrein
