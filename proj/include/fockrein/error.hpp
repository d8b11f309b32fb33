// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fockrein {

/// Malformed input: dimension mismatch, wrong linearity tag, bad signature,
/// invalid permutation and the like.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form route was asked to run outside its convergence hypothesis
/// (operator norm of the relevant composite not below one).
class HypothesisViolation : public std::domain_error {
 public:
  HypothesisViolation(const std::string& what, double norm)
      : std::domain_error(what), norm_(norm) {}

  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

/// A linear solve hit a (numerically) singular system.
class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fockrein
