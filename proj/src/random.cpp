// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fockrein {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return r % n;
}

Complex Rng::unit_disc() {
  const double r = std::sqrt(uniform());
  const double phi = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, phi);
}

KVector Rng::vector(int dim) {
  KVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = unit_disc();
  return v;
}

CMatrix Rng::matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = unit_disc();
  }
  return m;
}

KreinSpace Rng::signature(int dim) {
  std::vector<int> sig(static_cast<std::size_t>(dim));
  for (int& s : sig) s = (engine_() >> 63) ? 1 : -1;
  return KreinSpace(std::move(sig));
}

KOperator Rng::conj_antisymmetric(const KreinSpace& space) {
  const int d = space.dim();
  const CMatrix a = matrix(d, d);
  const CMatrix antisym = 0.5 * (a - a.transpose());
  // S·M = antisym, S² = 1
  return KOperator::conjugate_linear(space.signs().cast<Complex>().asDiagonal() * antisym);
}

CMatrix Rng::unitary(int dim) {
  const CMatrix a = matrix(dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

KOperator Rng::adapted_isometry(const KreinSpace& space) {
  const int d = space.dim();
  std::vector<int> pos;
  std::vector<int> neg;
  for (int i = 0; i < d; ++i) (space.sign(i) > 0 ? pos : neg).push_back(i);
  CMatrix g = CMatrix::Zero(d, d);
  for (const auto* block : {&pos, &neg}) {
    const int n = static_cast<int>(block->size());
    if (n == 0) continue;
    const CMatrix u = unitary(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) g((*block)[a], (*block)[b]) = u(a, b);
    }
  }
  return KOperator::linear(std::move(g));
}

KOperator scale_to_norm(const KOperator& op, double target) {
  const double n = operator_norm(op);
  if (n == 0.0) return op;
  return Complex(target / n) * op;
}

}  // namespace fockrein
