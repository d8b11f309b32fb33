// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Fermionic Fock-Krein space over a finite-dimensional Krein space.
 *
 * A state is an antisymmetric multilinear form of mixed degree. It is stored
 * densely: one coefficient per subset I of basis indices, addressed by the
 * bitmask of I, with c_I = ψ(ζ_{i_1}, …, ζ_{i_n}) for i_1 < … < i_n. The whole
 * Fock space therefore has dimension 2^d and operators on it are 2^d × 2^d
 * matrices in this basis.
 *
 * The degree-n inner product is
 *
 *     ⟨η, ψ⟩ = 2^n (n!)² Σ_I (Π_{i∈I} s_i) conj(η_I) ψ_I
 *
 * which is the sum over all ordered index tuples with each increasing tuple
 * counted n! times.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fockrein/krein.hpp"
#include "fockrein/report.hpp"

namespace fockrein {

using Mask = std::uint32_t;

/// Largest dimension for which states are materialized.
inline constexpr int kMaxFockDim = 20;

int degree_of(Mask mask) noexcept;
/// Product of the signs over the indices in `mask`.
int sign_product(const KreinSpace& space, Mask mask);
/// Increasing index list of a mask.
std::vector<int> indices_of(Mask mask);

class FockState {
 public:
  /// The zero state.
  explicit FockState(const KreinSpace& space);
  FockState(const KreinSpace& space, CVector coefficients);

  static FockState vacuum(const KreinSpace& space);
  static FockState basis(const KreinSpace& space, Mask mask);

  const KreinSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }

  Complex operator[](Mask mask) const { return coeffs_(static_cast<Eigen::Index>(mask)); }
  Complex& operator[](Mask mask) { return coeffs_(static_cast<Eigen::Index>(mask)); }

  /// c_I for a strictly increasing index tuple; throws UsageError otherwise.
  Complex coefficient(std::span<const int> increasing) const;

  const CVector& coefficients() const noexcept { return coeffs_; }

  /// Degree-n part (zero state when n is outside 0..d).
  FockState component(int n) const;

  /// The single degree carrying nonzero coefficients, if there is exactly one.
  std::optional<int> pure_degree() const;
  /// Degree parity when all nonzero coefficients share it.
  std::optional<int> f_degree() const;
  bool is_zero() const;

  FockState& operator+=(const FockState& other);
  FockState& operator-=(const FockState& other);
  FockState& operator*=(Complex c);

  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(Complex c, FockState a) { return a *= c; }

 private:
  void require_same_space(const FockState& other) const;

  KreinSpace space_;
  CVector coeffs_;
};

/// ψ(args_1, …, args_n) for n = args.size(); zero when n exceeds d.
Complex evaluate(const FockState& psi, std::span<const KVector> args);

/// Diagonal of the Fock Gram matrix, 2^n (n!)² Π s_i per basis state.
Eigen::VectorXd fock_metric(const KreinSpace& space);

Complex fock_inner(const FockState& eta, const FockState& psi);

/// Norm for the Hilbertization with the positive/negative split of each degree.
double fock_hilbert_norm(const FockState& psi);

FockState annihilate(const KVector& tau, const FockState& psi);
FockState create(const KVector& tau, const FockState& psi);

CMatrix annihilation_matrix(const KreinSpace& space, const KVector& tau);
CMatrix creation_matrix(const KreinSpace& space, const KVector& tau);

FockState apply_operator(const CMatrix& op, const FockState& psi);

/// Krein adjoint on Fock space, G⁻¹ Xᴴ G.
CMatrix fock_adjoint(const KreinSpace& space, const CMatrix& op);

/// Operator norm of X for the Hilbertized Fock inner product.
double fock_operator_norm(const KreinSpace& space, const CMatrix& op);

/// (ψ⁺, ψ⁻): index sets with an even / odd number of negative directions.
std::pair<FockState, FockState> pm_decompose(const FockState& psi);

/// Numerical check of the anticommutation relations as 2^d × 2^d matrix
/// identities for random pairs (trial i seeded with seed ^ i).
Report car_suite(const KreinSpace& space, int trials, std::uint64_t seed, double tol = 1e-10);

}  // namespace fockrein
