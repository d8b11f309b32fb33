// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cycle_index.hpp
 * @brief Pairing-graph polynomials p_n and the symmetric-group cycle index q_n.
 *
 * A permutation σ of {0, …, 2n−1} gives a graph on 2n vertices with the fixed
 * edges (2k, 2k+1) and the edges (σ(2k), σ(2k+1)). It splits into cycles of
 * even length; a cycle with 2k edges contributes a factor x_k. p_n sums these
 * monomials over all σ. The rescaling q_n = p_n / (4^n (n!)²) with x_k = 2y_k is
 * the cycle index Σ Π_k (y_k/k)^{j_k} / j_k! of S_n.
 *
 * All coefficients are exact rationals.
 */

#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fockrein/report.hpp"

namespace fockrein {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Multiplicities (j_1, …, j_n).
using Exponents = std::vector<int>;

enum class VariableFamily { x, y };

class CycleIndexPoly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  CycleIndexPoly(VariableFamily family, int num_vars);

  static CycleIndexPoly one(VariableFamily family, int num_vars);

  VariableFamily family() const noexcept { return family_; }
  int num_vars() const noexcept { return num_vars_; }
  /// Terms in descending lexicographic order of exponent vectors.
  const TermMap& terms() const noexcept { return terms_; }

  /// Adds c·Π var_k^{e_k}; `e` is padded or checked against num_vars.
  void add_term(Exponents e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  Rational coefficient_sum() const;
  /// Every term satisfies Σ k·j_k = weight.
  bool weight_homogeneous(int weight) const;

  /// Same polynomial with room for `num_vars` variables.
  CycleIndexPoly widened(int num_vars) const;

  /// e.g. "q_2 = 1/2 y1^2 + 1/2 y2".
  std::string to_string(const std::string& name) const;

  friend bool operator==(const CycleIndexPoly& a, const CycleIndexPoly& b);

 private:
  VariableFamily family_;
  int num_vars_;
  TermMap terms_;
};

std::string to_string(const Rational& r);

/// Cycle multiplicities of the pairing graph of σ (a permutation of 0..2n−1).
/// Throws UsageError when σ is not a permutation of even length.
Exponents p_sigma(std::span<const int> sigma);

/// Sum over all (2n)! permutations; n ≤ 5.
CycleIndexPoly p_n_enumerate(int n);

CycleIndexPoly p_n_recursive(int n);
CycleIndexPoly q_n_recursive(int n);
CycleIndexPoly q_n_closed(int n);

/// x_k = 2y_k together with division by 4^n (n!)².
CycleIndexPoly q_from_p(const CycleIndexPoly& p, int n);
CycleIndexPoly p_from_q(const CycleIndexPoly& q, int n);

/// Weight-n slices of exp(Σ_{k≤N} y_k/k) compared exactly with q_n, n ≤ N.
Report series_identity_check(int max_weight);

/// Evaluates at values[k−1] for variable k. Throws UsageError when a needed
/// value is missing.
std::complex<double> evaluate_poly(const CycleIndexPoly& poly,
                                   std::span<const std::complex<double>> values);

/// |(S_2)^{2n} × (S_n)²| with each factor counted by enumeration.
BigInt symmetry_group_order(int n);

BigInt factorial_big(int n);

}  // namespace fockrein
