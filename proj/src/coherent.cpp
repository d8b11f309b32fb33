// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/coherent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "fockrein/error.hpp"
#include "fockrein/fredholm.hpp"

namespace fockrein {

namespace {

constexpr int kLiteralMaxDim = 7;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// B_pq = {Λζ_q, ζ_p} = s_p conj(M_pq)
CMatrix pairing_matrix(const KreinSpace& space, const KOperator& lambda) {
  return space.signs().cast<Complex>().asDiagonal() * lambda.matrix().conjugate();
}

// Pf of every principal submatrix, indexed by mask. Each mask expands along its
// lowest index i: Pf = Σ_j (−1)^{pos(j)−1} a_ij Pf(mask∖{i,j}).
std::vector<Complex> subset_pfaffians(const CMatrix& a) {
  const int d = static_cast<int>(a.rows());
  const Mask size = Mask{1} << d;
  std::vector<Complex> pf(size, 0.0);
  pf[0] = 1.0;
  for (Mask m = 1; m < size; ++m) {
    if (std::popcount(m) & 1) continue;
    const int i = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    Complex acc = 0.0;
    int pos = 1;
    for (Mask r = rest; r != 0; r &= r - 1, ++pos) {
      const int j = std::countr_zero(r);
      const double sign = (pos & 1) ? 1.0 : -1.0;
      acc += sign * a(i, j) * pf[rest & ~(Mask{1} << j)];
    }
    pf[m] = acc;
  }
  return pf;
}

int inversion_parity(const std::vector<int>& perm) {
  int parity = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) parity ^= (perm[a] > perm[b]) ? 1 : 0;
  }
  return parity;
}

}  // namespace

CoherentData CoherentData::zero(int dim) {
  return {KOperator::zero(dim, Linearity::conjugate_linear), KVector::Zero(dim)};
}

void validate(const KreinSpace& space, const CoherentData& data, double tol) {
  require_dim(space, data.lambda, "coherent parameter");
  require_dim(space, data.xi, "coherent vector");
  if (!is_conj_antisymmetric(space, data.lambda, tol)) {
    throw UsageError("coherent parameter is not conjugate anti-symmetric");
  }
}

FockState coherent_series(const KreinSpace& space, const CoherentData& data) {
  validate(space, data);
  const int d = space.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto step = [&](const FockState& t) {
    FockState out = inv_sqrt2 * create(data.xi, t);
    for (int i = 0; i < d; ++i) {
      KVector e = KVector::Zero(d);
      e(i) = 1.0;
      out += (0.5 * space.sign(i)) * create(data.lambda.matrix().col(i), create(e, t));
    }
    return out;
  };
  FockState term = FockState::vacuum(space);
  FockState sum = term;
  for (int m = 1; m <= d; ++m) {
    term = (1.0 / m) * step(term);
    sum += term;
  }
  return sum;
}

FockState coherent_explicit(const KreinSpace& space, const CoherentData& data) {
  validate(space, data);
  const int d = space.dim();
  const CMatrix b = pairing_matrix(space, data.lambda);
  const std::vector<Complex> pf = subset_pfaffians(b);
  FockState out(space);
  for (Mask m = 0; m < (Mask{1} << d); ++m) {
    const int deg = std::popcount(m);
    const int n = deg / 2;
    if ((deg & 1) == 0) {
      out[m] = pf[m] / (std::ldexp(1.0, n) * factorial(deg));
      continue;
    }
    Complex acc = 0.0;
    int pos = 0;
    for (Mask r = m; r != 0; r &= r - 1, ++pos) {
      const int p = std::countr_zero(r);
      const Complex w = static_cast<double>(space.sign(p)) * std::conj(data.xi(p));
      acc += ((pos & 1) ? -1.0 : 1.0) * w * pf[m & ~(Mask{1} << p)];
    }
    out[m] = acc / (std::ldexp(1.0, n + 1) * factorial(deg));
  }
  return out;
}

FockState coherent_explicit_literal(const KreinSpace& space, const CoherentData& data) {
  validate(space, data);
  const int d = space.dim();
  if (d > kLiteralMaxDim) {
    throw UsageError("literal permutation sums are limited to dimension " +
                     std::to_string(kLiteralMaxDim));
  }
  const CMatrix b = pairing_matrix(space, data.lambda);
  FockState out(space);
  for (Mask m = 0; m < (Mask{1} << d); ++m) {
    const std::vector<int> idx = indices_of(m);
    const int deg = static_cast<int>(idx.size());
    const int n = deg / 2;
    const bool odd = deg & 1;
    std::vector<int> perm(idx.size());
    std::iota(perm.begin(), perm.end(), 0);
    Complex acc = 0.0;
    do {
      Complex term = inversion_parity(perm) ? -1.0 : 1.0;
      int k = 0;
      if (odd) {
        const int p = idx[static_cast<std::size_t>(perm[0])];
        term *= static_cast<double>(space.sign(p)) * std::conj(data.xi(p));
        k = 1;
      }
      for (; k + 1 < deg; k += 2) {
        term *= b(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])],
                  idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k + 1)])]);
      }
      acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const double norm = std::ldexp(1.0, odd ? 2 * n + 1 : 2 * n) * factorial(n) * factorial(deg);
    out[m] = acc / norm;
  }
  return out;
}

Complex pfaffian(const CMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("Pfaffian needs a square matrix");
  if (a.rows() > kMaxFockDim) throw UsageError("Pfaffian size exceeds the supported maximum");
  if (a.rows() % 2 == 1) return 0.0;
  return subset_pfaffians(a).back();
}

Complex overlap_b(const KreinSpace& space, const CoherentData& left, const CoherentData& right) {
  validate(space, left);
  validate(space, right);
  const CMatrix prod = compose(left.lambda, right.lambda).matrix();
  const CMatrix system = CMatrix::Identity(prod.rows(), prod.cols()) - prod;
  const Eigen::FullPivLU<CMatrix> lu(system);
  if (!lu.isInvertible()) throw SolveError("1 - Lambda Lambda' is singular");
  return inner(space, right.xi, lu.solve(left.xi));
}

Complex overlap_closed(const KreinSpace& space, const CoherentData& left,
                       const CoherentData& right) {
  validate(space, left);
  validate(space, right);
  const CMatrix prod = compose(left.lambda, right.lambda).matrix();
  const Complex root = sqrt_det_one_minus(prod, "Lambda Lambda'");
  return (1.0 + 0.5 * overlap_b(space, left, right)) * root;
}

Complex wave_function(const KreinSpace& space, const CoherentData& data, const FockState& psi) {
  return fock_inner(coherent_explicit(space, data), psi);
}

}  // namespace fockrein
