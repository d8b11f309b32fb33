// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file suites.hpp
 * @brief Randomized verification suites driven by a run configuration.
 *
 * Trial i of every suite draws from Rng::for_trial(seed, i), so reports are
 * reproducible and independent of evaluation order. Every check carries its
 * own built-in tolerance; an explicit `tol` in the configuration replaces the
 * floating-point ones, while exact checks keep tolerance zero.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockrein/krein.hpp"
#include "fockrein/report.hpp"

namespace fockrein {

struct RunConfig {
  std::optional<int> dim;
  std::optional<std::string> signature;
  std::uint64_t seed = 42;
  std::optional<int> trials;
  std::optional<double> tol;
  int max_degree = 8;

  /// Throws UsageError on an inconsistent configuration.
  void validate() const;

  /// The fixed space when a signature or dimension pins one down.
  std::optional<KreinSpace> fixed_space() const;

  int trials_or(int fallback) const { return trials.value_or(fallback); }
  double tol_or(double fallback) const { return tol.value_or(fallback); }

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

Report krein_suite(const RunConfig& cfg);
Report car_sweep(const RunConfig& cfg);
Report lie_suite(const RunConfig& cfg);
Report coherent_suite(const RunConfig& cfg);
Report amplitude_suite(const RunConfig& cfg);
/// Axioms, orientation and gluing maps, and slice-region overlaps.
Report gluing_suite(const RunConfig& cfg);
Report combinatorics_suite(const RunConfig& cfg);

/// Dispatches by name; "all" runs every suite and prefixes check names.
Report run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace fockrein
