// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockrein/krein.hpp"

namespace fockrein {

/// Which error a check is judged on.
enum class ErrorMode { absolute, relative };

struct CheckRecord {
  std::string name;
  std::size_t trials = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  ErrorMode mode = ErrorMode::absolute;
  bool pass = true;
};

/// Accumulates worst-case deviations for one named check. A check passes when
/// the judged error is exactly zero or strictly below the tolerance, so a zero
/// tolerance means an exact check. NaN never passes.
class ErrorTracker {
 public:
  ErrorTracker(std::string name, double tolerance, ErrorMode mode = ErrorMode::absolute);

  void observe(Complex got, Complex want);
  void observe(double got, double want) { observe(Complex(got), Complex(want)); }
  /// Records a precomputed absolute deviation (relative error taken equal).
  void observe_deviation(double err);
  /// Boolean predicate checks: a false outcome is an infinite deviation.
  void observe_flag(bool ok);

  CheckRecord record() const;
  bool pass() const { return record().pass; }

 private:
  CheckRecord rec_;
  bool failed_flag_ = false;
};

class Report {
 public:
  Report() = default;
  Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

  void add(const CheckRecord& rec);
  void add(const ErrorTracker& tracker) { add(tracker.record()); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void set_config(nlohmann::json config) { config_ = std::move(config); }

  /// Folds another report in: trials add, maxima combine, pass flags conjoin.
  /// The result does not depend on merge order.
  void merge(const Report& other);

  bool pass() const;
  const std::string& suite() const noexcept { return suite_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::vector<CheckRecord> checks() const;
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  /// JSON form; the "timestamp" field is the only non-deterministic member.
  nlohmann::json to_json(bool with_timestamp = true) const;

  /// One line per check, then an overall line.
  std::string summary() const;

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  nlohmann::json config_ = nlohmann::json::object();
  std::map<std::string, CheckRecord> records_;
  std::vector<std::string> notes_;
};

}  // namespace fockrein
