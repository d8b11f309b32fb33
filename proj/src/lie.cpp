// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/lie.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fockrein/error.hpp"
#include "fockrein/fock.hpp"

namespace fockrein {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

KVector unit(int dim, int i) {
  KVector e = KVector::Zero(dim);
  e(i) = 1.0;
  return e;
}

CMatrix diag_s(const KreinSpace& space) { return space.signs().cast<Complex>().asDiagonal(); }

// η ↦ a{η,b}, conjugate-linear
CMatrix outer_conj(const KreinSpace& space, const KVector& a, const KVector& b) {
  return a * b.transpose() * diag_s(space);
}

// η ↦ a{b,η}, linear
CMatrix outer_lin(const KreinSpace& space, const KVector& a, const KVector& b) {
  return a * (diag_s(space) * b.conjugate()).transpose();
}

CMatrix star_matrix(const KreinSpace& space, const CMatrix& l) {
  return diag_s(space) * l.adjoint() * diag_s(space);
}

double order_sign(Mask mask, int i) {
  const Mask below = mask & ((Mask{1} << i) - 1);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_conj(const KOperator& op, const char* what) {
  if (op.is_linear()) throw UsageError(std::string(what) + " must be conjugate-linear");
}

}  // namespace

LieElement LieElement::zero(int dim) {
  return {KOperator::zero(dim, Linearity::linear),
          KOperator::zero(dim, Linearity::conjugate_linear),
          KOperator::zero(dim, Linearity::conjugate_linear), KVector::Zero(dim),
          KVector::Zero(dim)};
}

LieElement LieElement::current(const KOperator& lambda) {
  LieElement x = zero(lambda.dim());
  x.lambda = lambda;
  return x;
}

LieElement LieElement::pair_annihilator(const KOperator& lam) {
  LieElement x = zero(lam.dim());
  x.lam_plus = lam;
  return x;
}

LieElement LieElement::pair_creator(const KOperator& lam) {
  LieElement x = zero(lam.dim());
  x.lam_minus = lam;
  return x;
}

LieElement LieElement::annihilator(const KVector& xi) {
  LieElement x = zero(static_cast<int>(xi.size()));
  x.xi_plus = xi;
  return x;
}

LieElement LieElement::creator(const KVector& xi) {
  LieElement x = zero(static_cast<int>(xi.size()));
  x.xi_minus = xi;
  return x;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  return {a.lambda + b.lambda, a.lam_plus + b.lam_plus, a.lam_minus + b.lam_minus,
          a.xi_plus + b.xi_plus, a.xi_minus + b.xi_minus};
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  return {a.lambda - b.lambda, a.lam_plus - b.lam_plus, a.lam_minus - b.lam_minus,
          a.xi_plus - b.xi_plus, a.xi_minus - b.xi_minus};
}

// rep(c·x) = c·rep(x)
LieElement operator*(Complex c, const LieElement& a) {
  return {c * a.lambda, KOperator::conjugate_linear(c * a.lam_plus.matrix()),
          KOperator::conjugate_linear(std::conj(c) * a.lam_minus.matrix()), c * a.xi_plus,
          std::conj(c) * a.xi_minus};
}

void validate(const KreinSpace& space, const LieElement& x, double tol) {
  require_dim(space, x.lambda, "lambda");
  require_dim(space, x.lam_plus, "pair annihilation parameter");
  require_dim(space, x.lam_minus, "pair creation parameter");
  require_dim(space, x.xi_plus, "annihilation vector");
  require_dim(space, x.xi_minus, "creation vector");
  if (!x.lambda.is_linear()) throw UsageError("lambda must be linear");
  if (!is_conj_antisymmetric(space, x.lam_plus, tol)) {
    throw UsageError("pair annihilation parameter is not conjugate anti-symmetric");
  }
  if (!is_conj_antisymmetric(space, x.lam_minus, tol)) {
    throw UsageError("pair creation parameter is not conjugate anti-symmetric");
  }
}

CMatrix current_operator(const KreinSpace& space, const KOperator& lambda) {
  require_dim(space, lambda, "lambda");
  if (!lambda.is_linear()) throw UsageError("lambda must be linear");
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(Mask{1} << d);
  CMatrix out = -0.5 * trace(space, lambda) * CMatrix::Identity(size, size);
  for (int i = 0; i < d; ++i) {
    out += static_cast<double>(space.sign(i)) * creation_matrix(space, unit(d, i)) *
           annihilation_matrix(space, lambda.matrix().col(i));
  }
  return out;
}

CMatrix pair_annihilation(const KreinSpace& space, const KOperator& lam) {
  require_dim(space, lam, "pair parameter");
  require_conj(lam, "pair parameter");
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(Mask{1} << d);
  CMatrix out = CMatrix::Zero(size, size);
  for (int i = 0; i < d; ++i) {
    out += 0.5 * space.sign(i) * annihilation_matrix(space, unit(d, i)) *
           annihilation_matrix(space, lam.matrix().col(i));
  }
  return out;
}

CMatrix pair_creation(const KreinSpace& space, const KOperator& lam) {
  require_dim(space, lam, "pair parameter");
  require_conj(lam, "pair parameter");
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(Mask{1} << d);
  CMatrix out = CMatrix::Zero(size, size);
  for (int i = 0; i < d; ++i) {
    out += 0.5 * space.sign(i) * creation_matrix(space, lam.matrix().col(i)) *
           creation_matrix(space, unit(d, i));
  }
  return out;
}

CMatrix pair_annihilation_from_action(const KreinSpace& space, const KOperator& lam) {
  require_dim(space, lam, "pair parameter");
  require_conj(lam, "pair parameter");
  const int d = space.dim();
  const Mask size = Mask{1} << d;
  const CMatrix& m = lam.matrix();
  CMatrix out = CMatrix::Zero(size, size);
  // (Λ̂ψ)_J = n(n−1) Σ_{i,k} s_i M_{ki} ψ(ζ_k, ζ_i, ζ_J), n = |J| + 2
  for (Mask j = 0; j < size; ++j) {
    const int n = degree_of(j) + 2;
    if (n > d) continue;
    for (int i = 0; i < d; ++i) {
      const Mask bi = Mask{1} << i;
      if (j & bi) continue;
      const Mask ji = j | bi;
      for (int k = 0; k < d; ++k) {
        const Mask bk = Mask{1} << k;
        if (ji & bk) continue;
        const double sign = order_sign(j, i) * order_sign(ji, k);
        out(j, ji | bk) += static_cast<double>(n * (n - 1)) * space.sign(i) * sign * m(k, i);
      }
    }
  }
  return out;
}

CMatrix pair_creation_from_action(const KreinSpace& space, const KOperator& lam) {
  require_dim(space, lam, "pair parameter");
  require_conj(lam, "pair parameter");
  const int d = space.dim();
  const Mask size = Mask{1} << d;
  const CMatrix& m = lam.matrix();
  CMatrix out = CMatrix::Zero(size, size);
  // Group the permutations by the ordered pair (σ(1), σ(2)) = (p, q); the
  // remaining n! orderings each reproduce ψ at J∖{p,q} with the same sign.
  // {Λζ_q, ζ_p} = s_p conj(M_pq).
  for (Mask j = 0; j < size; ++j) {
    const int total = degree_of(j);
    if (total < 2) continue;
    const int n = total - 2;
    const double scale = factorial(n) / (4.0 * factorial(n + 2));
    for (int p = 0; p < d; ++p) {
      const Mask bp = Mask{1} << p;
      if (!(j & bp)) continue;
      const Mask jp = j & ~bp;
      for (int q = 0; q < d; ++q) {
        const Mask bq = Mask{1} << q;
        if (!(jp & bq)) continue;
        const double sign = order_sign(j, p) * order_sign(jp, q);
        out(j, jp & ~bq) += scale * sign * space.sign(p) * std::conj(m(p, q));
      }
    }
  }
  return out;
}

CMatrix rep(const KreinSpace& space, const LieElement& x) {
  validate(space, x);
  return current_operator(space, x.lambda) + pair_annihilation(space, x.lam_plus) +
         pair_creation(space, x.lam_minus) + kInvSqrt2 * annihilation_matrix(space, x.xi_plus) +
         kInvSqrt2 * creation_matrix(space, x.xi_minus);
}

LieElement bracket(const KreinSpace& space, const LieElement& x, const LieElement& y) {
  const CMatrix& l1 = x.lambda.matrix();
  const CMatrix& l2 = y.lambda.matrix();
  const CMatrix& a1 = x.lam_plus.matrix();
  const CMatrix& a2 = y.lam_plus.matrix();
  const CMatrix& c1 = x.lam_minus.matrix();
  const CMatrix& c2 = y.lam_minus.matrix();
  const KVector& p1 = x.xi_plus;
  const KVector& p2 = y.xi_plus;
  const KVector& m1 = x.xi_minus;
  const KVector& m2 = y.xi_minus;
  const CMatrix s1 = star_matrix(space, l1);
  const CMatrix s2 = star_matrix(space, l2);

  const CMatrix lambda = l2 * l1 - l1 * l2 + a1 * c2.conjugate() - a2 * c1.conjugate() +
                         outer_lin(space, p2, m1) - outer_lin(space, p1, m2);
  const CMatrix plus = (-l1 * a2 - a2 * s1.conjugate()) - (-l2 * a1 - a1 * s2.conjugate()) +
                       outer_conj(space, p2, p1) - outer_conj(space, p1, p2);
  const CMatrix minus = (s1 * c2 + c2 * l1.conjugate()) - (s2 * c1 + c1 * l2.conjugate()) +
                        outer_conj(space, m1, m2) - outer_conj(space, m2, m1);
  const KVector xp = -l1 * p2 + l2 * p1 - a1 * m2.conjugate() + a2 * m1.conjugate();
  const KVector xm = s1 * m2 - s2 * m1 + c1 * p2.conjugate() - c2 * p1.conjugate();
  return {KOperator::linear(lambda), KOperator::conjugate_linear(plus),
          KOperator::conjugate_linear(minus), xp, xm};
}

LieElement star(const KreinSpace& space, const LieElement& x) {
  return {adjoint(space, x.lambda), x.lam_minus, x.lam_plus, x.xi_minus, x.xi_plus};
}

Complex gip(const KreinSpace& space, const LieElement& x, const LieElement& y) {
  const Complex t_lambda = trace(space, compose(adjoint(space, x.lambda), y.lambda));
  const Complex t_plus = trace(space, compose(y.lam_plus, x.lam_plus));
  const Complex t_minus = trace(space, compose(x.lam_minus, y.lam_minus));
  return 2.0 * t_lambda - t_plus - t_minus + 2.0 * inner(space, y.xi_minus, x.xi_minus) +
         2.0 * inner(space, x.xi_plus, y.xi_plus);
}

LieElement random_element(const KreinSpace& space, Rng& rng) {
  const int d = space.dim();
  KOperator lambda = KOperator::linear(rng.matrix(d, d));
  KOperator plus = rng.conj_antisymmetric(space);
  KOperator minus = rng.conj_antisymmetric(space);
  KVector xp = rng.vector(d);
  KVector xm = rng.vector(d);
  return {std::move(lambda), std::move(plus), std::move(minus), std::move(xp), std::move(xm)};
}

LieElement random_real_element(const KreinSpace& space, Rng& rng) {
  const int d = space.dim();
  const KOperator l = KOperator::linear(rng.matrix(d, d));
  const KOperator plus = rng.conj_antisymmetric(space);
  const KVector xp = rng.vector(d);
  return {l - adjoint(space, l), plus, -plus, xp, -xp};
}

double max_deviation(const LieElement& a, const LieElement& b) {
  auto dev = [](const auto& u, const auto& v) {
    return u.size() == 0 ? 0.0 : (u - v).cwiseAbs().maxCoeff();
  };
  return std::max({dev(a.lambda.matrix(), b.lambda.matrix()),
                   dev(a.lam_plus.matrix(), b.lam_plus.matrix()),
                   dev(a.lam_minus.matrix(), b.lam_minus.matrix()), dev(a.xi_plus, b.xi_plus),
                   dev(a.xi_minus, b.xi_minus)});
}

NormIdentityValues norm_identity_values(const KreinSpace& space, const KOperator& lam,
                                        const KVector& xi) {
  if (!is_conj_antisymmetric(space, lam)) {
    throw UsageError("pair parameter is not conjugate anti-symmetric");
  }
  require_dim(space, xi, "vector");
  NormIdentityValues v;
  const CMatrix ann = pair_annihilation(space, lam);
  const CMatrix cre = pair_creation(space, lam);
  const FockState vac = FockState::vacuum(space);
  v.pair_annihilation_op_sq = std::pow(fock_operator_norm(space, ann), 2);
  v.pair_creation_op_sq = std::pow(fock_operator_norm(space, cre), 2);
  v.pair_vacuum_sq = std::pow(fock_hilbert_norm(apply_operator(cre, vac)), 2);
  const auto [preserving, interchanging] = split_by_decomposition(space, lam);
  v.block_traces = (-0.5 * trace(space, compose(preserving, preserving)) +
                    0.5 * trace(space, compose(interchanging, interchanging)))
                       .real();
  const CMatrix single_ann = kInvSqrt2 * annihilation_matrix(space, xi);
  v.single_op_sq = std::pow(fock_operator_norm(space, single_ann), 2);
  v.single_vacuum_sq =
      std::pow(fock_hilbert_norm(apply_operator(kInvSqrt2 * creation_matrix(space, xi), vac)), 2);
  v.half_norm_sq = 0.5 * xi.squaredNorm();
  return v;
}

Report norm_identities(const KreinSpace& space, const KOperator& lam, const KVector& xi,
                       double tol) {
  const NormIdentityValues v = norm_identity_values(space, lam, xi);
  Report report("norm_identities", 0);
  ErrorTracker ann("pair_annihilation_op_norm", tol, ErrorMode::relative);
  ErrorTracker cre("pair_creation_op_norm", tol, ErrorMode::relative);
  ErrorTracker vac("pair_creation_vacuum_norm", tol, ErrorMode::relative);
  ErrorTracker single("single_op_norm", tol, ErrorMode::relative);
  ErrorTracker single_vac("single_creation_vacuum_norm", tol, ErrorMode::relative);
  ann.observe(v.pair_annihilation_op_sq, v.block_traces);
  cre.observe(v.pair_creation_op_sq, v.block_traces);
  vac.observe(v.pair_vacuum_sq, v.block_traces);
  single.observe(v.single_op_sq, v.half_norm_sq);
  single_vac.observe(v.single_vacuum_sq, v.half_norm_sq);
  for (const auto* t : {&ann, &cre, &vac, &single, &single_vac}) report.add(*t);
  return report;
}

}  // namespace fockrein
