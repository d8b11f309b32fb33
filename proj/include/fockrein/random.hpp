// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random.hpp
 * @brief Seeded sampling of vectors, operators and spaces.
 *
 * Everything is driven by std::mt19937_64. Doubles are formed from the top 53
 * bits of each draw, so a seed reproduces the same samples on every platform
 * (the standard distributions are implementation-defined and are not used).
 */

#pragma once

#include <cstdint>
#include <random>

#include "fockrein/krein.hpp"

namespace fockrein {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Trial `i` of a run seeded with `seed` draws from Rng(seed ^ i).
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(seed ^ trial); }

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform on the closed unit disc.
  Complex unit_disc();

  KVector vector(int dim);
  CMatrix matrix(int rows, int cols);

  /// Random ±1 pattern of length dim.
  KreinSpace signature(int dim);

  /// Conjugate-linear Λ with S·M antisymmetric.
  KOperator conj_antisymmetric(const KreinSpace& space);

  /// Unitary with Haar-like spread (QR of a random matrix with phase fix).
  CMatrix unitary(int dim);

  /// Complex-linear real isometry preserving the decomposition (block unitary).
  KOperator adapted_isometry(const KreinSpace& space);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Rescales op so that its operator norm equals `target` (zero stays zero).
KOperator scale_to_norm(const KOperator& op, double target);

}  // namespace fockrein
