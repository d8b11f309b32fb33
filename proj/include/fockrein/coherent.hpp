// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file coherent.hpp
 * @brief Fermionic coherent states K(Λ, ξ) = exp(Λ̂† + ξ̂†)ψ₀ and their overlaps.
 *
 * With B = S·conj(M) (M the stored matrix of Λ) the degree components are
 *
 *     K_{2n}   at I = Pf(B_I) / (2^n (2n)!)
 *     K_{2n+1} at I = Σ_p (−1)^p s_p conj(ξ_p) Pf(B_{I∖p}) / (2^{n+1} (2n+1)!)
 *
 * where p runs over the positions of I, counted from zero.
 */

#pragma once

#include "fockrein/fock.hpp"
#include "fockrein/krein.hpp"

namespace fockrein {

struct CoherentData {
  KOperator lambda;  ///< conjugate-linear, conjugate anti-symmetric
  KVector xi;

  static CoherentData zero(int dim);
};

/// Throws UsageError unless the data fit `space` and Λ is conjugate anti-symmetric.
void validate(const KreinSpace& space, const CoherentData& data, double tol = kDefaultTolerance);

/// Σ_m (Λ̂† + ξ̂†)^m ψ₀ / m!, stopped at degree d.
FockState coherent_series(const KreinSpace& space, const CoherentData& data);

/// Closed degree formulas, Pfaffians by recursive row expansion.
FockState coherent_explicit(const KreinSpace& space, const CoherentData& data);

/// Closed degree formulas summed over all permutations; d ≤ 7.
FockState coherent_explicit_literal(const KreinSpace& space, const CoherentData& data);

/// Pfaffian of an antisymmetric matrix (zero for odd size, one for empty).
Complex pfaffian(const CMatrix& a);

/// b = {ξ', (1 − ΛΛ')⁻¹ ξ}. Throws SolveError when 1 − ΛΛ' is singular.
Complex overlap_b(const KreinSpace& space, const CoherentData& left, const CoherentData& right);

/// ⟨K(left), K(right)⟩ = (1 + b/2) det(1 − ΛΛ')^{1/2} with the trace-log branch.
/// Throws HypothesisViolation when ‖ΛΛ'‖_op ≥ 1.
Complex overlap_closed(const KreinSpace& space, const CoherentData& left,
                       const CoherentData& right);

/// f_ψ(data) = ⟨K(data), ψ⟩.
Complex wave_function(const KreinSpace& space, const CoherentData& data, const FockState& psi);

}  // namespace fockrein
