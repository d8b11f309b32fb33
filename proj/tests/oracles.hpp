// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

// Slow reference implementations used to cross-check the library. They work
// directly from multilinear-form definitions with explicit permutation sums.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fockrein/fock.hpp"
#include "fockrein/krein.hpp"

namespace oracle {

using fockrein::CMatrix;
using fockrein::Complex;
using fockrein::FockState;
using fockrein::KreinSpace;
using fockrein::KVector;
using fockrein::Mask;

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] > p[b]) sign = -sign;
    }
  }
  return sign;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// ψ at basis vectors ζ_{i_1}, …, ζ_{i_n} in any order, from antisymmetry.
inline Complex form_at(const FockState& psi, const std::vector<int>& tuple) {
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0.0;
  std::vector<int> rank(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    rank[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), tuple[k]) - sorted.begin());
  }
  Mask m = 0;
  for (int i : tuple) m |= Mask{1} << i;
  return static_cast<double>(permutation_sign(rank)) * psi[m];
}

/// Multilinear extension by expanding every argument in the basis.
inline Complex evaluate_leibniz(const FockState& psi, const std::vector<KVector>& args) {
  const int d = psi.dim();
  const int n = static_cast<int>(args.size());
  if (n == 0) return psi[0];
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  Complex total = 0.0;
  while (true) {
    Complex weight = 1.0;
    for (int k = 0; k < n; ++k) weight *= args[static_cast<std::size_t>(k)](tuple[static_cast<std::size_t>(k)]);
    if (weight != Complex(0.0)) total += weight * form_at(psi, tuple);
    int pos = 0;
    while (pos < n && ++tuple[static_cast<std::size_t>(pos)] == d) tuple[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return total;
}

/// Σ_n 2^n n! Σ over all ordered n-tuples Π s · conj(η(…)) ψ(…).
inline Complex inner_tuple_sum(const FockState& eta, const FockState& psi) {
  const int d = psi.dim();
  Complex total = 0.0;
  for (int n = 0; n <= d; ++n) {
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    Complex sum = 0.0;
    while (true) {
      double s = 1.0;
      for (int i : tuple) s *= psi.space().sign(i);
      sum += s * std::conj(form_at(eta, tuple)) * form_at(psi, tuple);
      int pos = 0;
      while (pos < n && ++tuple[static_cast<std::size_t>(pos)] == d) tuple[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
    total += std::ldexp(1.0, n) * factorial(n) * sum;
  }
  return total;
}

inline KVector basis(int d, int i) {
  KVector e = KVector::Zero(d);
  e(i) = 1.0;
  return e;
}

/// (a_τψ)(η_1…η_{n−1}) = √2 n ψ(τ, η_1, …).
inline FockState annihilate_from_forms(const KVector& tau, const FockState& psi) {
  const int d = psi.dim();
  FockState out(psi.space());
  for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) {
    const int n = fockrein::degree_of(m) + 1;
    if (n > d) continue;
    std::vector<KVector> args{tau};
    for (int i : fockrein::indices_of(m)) args.push_back(basis(d, i));
    out[m] = std::sqrt(2.0) * n * evaluate_leibniz(psi, args);
  }
  return out;
}

/// (a†_τψ)(η_1…η_{n+1}) = (1/(√2(n+1))) Σ_k (−1)^{k−1} {τ, η_k} ψ(…η̂_k…).
inline FockState create_from_forms(const KVector& tau, const FockState& psi) {
  const int d = psi.dim();
  const KreinSpace& space = psi.space();
  FockState out(space);
  for (Mask m = 1; m < static_cast<Mask>(psi.size()); ++m) {
    const std::vector<int> idx = fockrein::indices_of(m);
    const int count = static_cast<int>(idx.size());
    Complex acc = 0.0;
    for (int k = 0; k < count; ++k) {
      std::vector<KVector> rest;
      for (int l = 0; l < count; ++l) {
        if (l != k) rest.push_back(basis(d, idx[static_cast<std::size_t>(l)]));
      }
      const Complex pair = fockrein::inner(space, tau, basis(d, idx[static_cast<std::size_t>(k)]));
      acc += (k % 2 == 0 ? 1.0 : -1.0) * pair * evaluate_leibniz(psi, rest);
    }
    out[m] = acc / (std::sqrt(2.0) * count);
  }
  return out;
}

/// Sum over perfect matchings with crossing signs.
inline Complex pfaffian_matchings(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n % 2 == 1) return 0.0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    bool canonical = true;
    for (int k = 0; k + 1 < n; k += 2) {
      if (perm[static_cast<std::size_t>(k)] > perm[static_cast<std::size_t>(k + 1)]) canonical = false;
      if (k + 2 < n && perm[static_cast<std::size_t>(k)] > perm[static_cast<std::size_t>(k + 2)]) canonical = false;
    }
    if (!canonical) continue;
    Complex term = static_cast<double>(permutation_sign(perm));
    for (int k = 0; k + 1 < n; k += 2) term *= a(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const fockrein::CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

inline double state_distance(const FockState& a, const FockState& b) {
  return max_abs(fockrein::CVector(a.coefficients() - b.coefficients()));
}

}  // namespace oracle
