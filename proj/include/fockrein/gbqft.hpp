// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gbqft.hpp
 * @brief Hypersurfaces, regions and amplitudes for free fermions.
 *
 * Reversing the orientation of a hypersurface negates the signature and
 * conjugates coordinates, so vectors and operator matrices are carried to the
 * reversed space by entrywise conjugation. A region is described by its
 * boundary space and a conjugate-linear involutive adapted real anti-isometry u.
 * Its amplitude on a degree-2n state is
 *
 *     ρ(ψ) = ((2n)!/n!) Σ_{j_1..j_n} s_{j_1}…s_{j_n} ψ(uζ_{j_1}, ζ_{j_1}, …, uζ_{j_n}, ζ_{j_n})
 *
 * and vanishes on odd degrees.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "fockrein/coherent.hpp"
#include "fockrein/fock.hpp"
#include "fockrein/krein.hpp"
#include "fockrein/random.hpp"
#include "fockrein/report.hpp"

namespace fockrein {

enum class Orientation { standard, reversed };

struct Hypersurface {
  KreinSpace space;
  Orientation orientation = Orientation::standard;

  /// Same coordinates, signature negated, orientation flipped.
  Hypersurface reversed() const;
};

/// Canonical identification with the reversed space: entrywise conjugation.
KVector transport(const KVector& v);
KOperator transport(const KOperator& op);
CoherentData transport(const CoherentData& data);

class Region {
 public:
  /// Validates a balanced signature and the structural requirements on u.
  static Region make(const KreinSpace& boundary, const KOperator& u,
                     double tol = kDefaultTolerance);

  const KreinSpace& boundary() const noexcept { return boundary_; }
  const KOperator& u() const noexcept { return u_; }

 private:
  Region(KreinSpace boundary, KOperator u) : boundary_(std::move(boundary)), u_(std::move(u)) {}

  KreinSpace boundary_;
  KOperator u_;
};

/// Pairs the k-th positive direction with the k-th negative one by conjugate swap.
KOperator base_region_map(const KreinSpace& space);
Region base_region(const KreinSpace& space);

/// g·u₀·g⁻¹ with g a random block unitary.
Region random_region(const KreinSpace& space, Rng& rng);
/// d/2 positive directions followed by d/2 negative ones.
Region random_region(int dim, std::uint64_t seed);

Region disjoint_union(const Region& a, const Region& b);

/// Boundary L_Σ̄ ⊕ L_Σ with u exchanging the two copies.
Region slice_region(const Hypersurface& sigma);

/// Orientation reversal of states; the result lives over the negated signature.
FockState iota(const FockState& psi);

/// Graded product over the direct sum, first factor's coordinates first.
FockState tau(const FockState& first, const FockState& second);

/// Reorders coordinates of a state over A ⊕ B into B ⊕ A (`first_dim` = dim A).
FockState swap_blocks(const FockState& psi, int first_dim);

/// ι(K(Λ, ξ)) = K(conj Λ, −conj ξ) over the reversed space.
CoherentData iota_coherent_data(const CoherentData& data);

/// Data of τ(K(first), K(second)): Λ ⊕ Λ' plus the mixing term
/// η ↦ ½(ξ{η,ξ'} − ξ'{η,ξ}), and ξ ⊕ ξ'.
CoherentData tau_coherent_data(const KreinSpace& first_space, const CoherentData& first,
                               const KreinSpace& second_space, const CoherentData& second);

Complex amplitude_bruteforce(const Region& region, const FockState& psi);

/// Value on K_{2n}(Λ, ·) from the cycle index at y_k = −tr((uΛ)^k)/2.
Complex amplitude_degree_lemma(const Region& region, const KOperator& lambda, int n);

/// Σ_n of the degree lemma values.
Complex amplitude_degreewise(const Region& region, const CoherentData& data);

/// det(1 − uΛ)^{1/2} on the trace-log branch. Throws HypothesisViolation when
/// ‖uΛ‖_op ≥ 1.
Complex amplitude_closed(const Region& region, const CoherentData& data);

struct SliceResult {
  Complex slice_amplitude;  ///< closed amplitude of the slice region
  Complex closed_overlap;   ///< closed overlap formula
  Complex fock_overlap;     ///< ⟨K, K'⟩ from the Fock inner product
  std::vector<Complex> g;   ///< g_k = −½{ξ', (ΛΛ')^k ξ}
  Complex g_sum;
  Complex minus_half_b;
  double odd_trace_max = 0;  ///< max |tr((u(Λ̄ ⊕ Λ'))^k)| over odd k
  double even_trace_dev = 0;  ///< max |tr((u(Λ̄ ⊕ Λ'))^{2k}) − 2tr((ΛΛ')^k)|

  double max_deviation() const;
};

SliceResult slice_inner(const Hypersurface& sigma, const CoherentData& left,
                        const CoherentData& right);

/// Slice amplitude evaluated by the brute-force sum on τ(ι(K), K').
Complex slice_inner_bruteforce(const Hypersurface& sigma, const CoherentData& left,
                               const CoherentData& right);

FockState random_state(const KreinSpace& space, Rng& rng);
/// Random state supported on degrees of the given parity.
FockState random_parity_state(const KreinSpace& space, int parity, Rng& rng);
/// Random conjugate anti-symmetric Λ scaled to ‖Λ‖_op = lambda_norm, and ξ with
/// Hilbert norm xi_norm.
CoherentData random_coherent_data(const KreinSpace& space, Rng& rng, double lambda_norm,
                                  double xi_norm);

Report axiom_suite(std::uint64_t seed, int trials, double tol = 1e-10);

}  // namespace fockrein
