// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lie.hpp
 * @brief Quadratic and linear fermionic operators and their Lie algebra.
 *
 * An element is the five-tuple (λ, Λ₊, Λ₋, ξ₊, ξ₋) represented on Fock space by
 *
 *     λ̂ + Λ̂₊ + Λ̂₋† + a_{ξ₊}/√2 + a†_{ξ₋}/√2
 *
 * with λ̂ = Σ s_i a†_{ζ_i} a_{λζ_i} − ½tr(λ), Λ̂ = ½ Σ s_i a_{ζ_i} a_{Λζ_i} and
 * Λ̂† = ½ Σ s_i a†_{Λζ_i} a†_{ζ_i}.
 */

#pragma once

#include "fockrein/krein.hpp"
#include "fockrein/random.hpp"
#include "fockrein/report.hpp"

namespace fockrein {

struct LieElement {
  KOperator lambda;     ///< linear part
  KOperator lam_plus;   ///< pair annihilation parameter (conjugate-linear)
  KOperator lam_minus;  ///< pair creation parameter (conjugate-linear)
  KVector xi_plus;      ///< single annihilation
  KVector xi_minus;     ///< single creation

  static LieElement zero(int dim);
  static LieElement current(const KOperator& lambda);
  static LieElement pair_annihilator(const KOperator& lam);
  static LieElement pair_creator(const KOperator& lam);
  static LieElement annihilator(const KVector& xi);
  static LieElement creator(const KVector& xi);

  int dim() const noexcept { return lambda.dim(); }

  friend LieElement operator+(const LieElement& a, const LieElement& b);
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  friend LieElement operator*(Complex c, const LieElement& a);
};

/// Throws UsageError on wrong sizes, linearity tags or failed conjugate anti-symmetry.
void validate(const KreinSpace& space, const LieElement& x, double tol = kDefaultTolerance);

/// λ̂ as a Fock matrix.
CMatrix current_operator(const KreinSpace& space, const KOperator& lambda);

/// Λ̂ and Λ̂† from the sums of products of single-mode operators.
CMatrix pair_annihilation(const KreinSpace& space, const KOperator& lam);
CMatrix pair_creation(const KreinSpace& space, const KOperator& lam);

/// Λ̂ and Λ̂† from their action on multilinear forms:
///   (Λ̂ψ)(η…) = n(n−1) Σ s_i ψ(Λζ_i, ζ_i, η…)
///   (Λ̂†ψ)(η_1…η_{n+2}) = (1/(4(n+2)!)) Σ_σ (−1)^σ {Λη_σ(2), η_σ(1)} ψ(η_σ(3)…)
CMatrix pair_annihilation_from_action(const KreinSpace& space, const KOperator& lam);
CMatrix pair_creation_from_action(const KreinSpace& space, const KOperator& lam);

CMatrix rep(const KreinSpace& space, const LieElement& x);

LieElement bracket(const KreinSpace& space, const LieElement& x, const LieElement& y);

/// Element whose representative is the Fock adjoint of rep(x):
/// (λ*, Λ₋, Λ₊, ξ₋, ξ₊).
LieElement star(const KreinSpace& space, const LieElement& x);

/// Invariant form 2tr(λ₁*λ₂) − tr(Λ₊₂Λ₊₁) − tr(Λ₋₁Λ₋₂) + 2{ξ₋₂,ξ₋₁} + 2{ξ₊₁,ξ₊₂}.
Complex gip(const KreinSpace& space, const LieElement& x, const LieElement& y);

/// Uniformly drawn complex element.
LieElement random_element(const KreinSpace& space, Rng& rng);
/// Element of the real form, x* = −x.
LieElement random_real_element(const KreinSpace& space, Rng& rng);

/// Largest entry of the componentwise difference.
double max_deviation(const LieElement& a, const LieElement& b);

struct NormIdentityValues {
  double pair_annihilation_op_sq = 0;  ///< ‖Λ̂‖²_op
  double pair_creation_op_sq = 0;      ///< ‖Λ̂†‖²_op
  double pair_vacuum_sq = 0;           ///< ‖Λ̂†ψ₀‖²
  double block_traces = 0;             ///< −½tr(Λ₀²) + ½tr(Λ₁²)
  double single_op_sq = 0;             ///< ‖a_ξ/√2‖²_op
  double single_vacuum_sq = 0;         ///< ‖a†_ξψ₀/√2‖²
  double half_norm_sq = 0;             ///< ½‖ξ‖²
};

NormIdentityValues norm_identity_values(const KreinSpace& space, const KOperator& lam,
                                        const KVector& xi);

Report norm_identities(const KreinSpace& space, const KOperator& lam, const KVector& xi,
                       double tol = 1e-8);

}  // namespace fockrein
