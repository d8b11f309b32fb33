// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace fockrein {

namespace {

bool judged_pass(const CheckRecord& r) {
  const double err = r.mode == ErrorMode::absolute ? r.max_abs_err : r.max_rel_err;
  return err == 0.0 || err < r.tolerance;
}

// max that propagates NaN
double worst(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(a, b);
}

}  // namespace

ErrorTracker::ErrorTracker(std::string name, double tolerance, ErrorMode mode) {
  rec_.name = std::move(name);
  rec_.tolerance = tolerance;
  rec_.mode = mode;
}

void ErrorTracker::observe(Complex got, Complex want) {
  const double abs_err = std::abs(got - want);
  const double scale = std::abs(want);
  const double rel_err = scale > 0.0 ? abs_err / scale : abs_err;
  rec_.max_abs_err = worst(rec_.max_abs_err, abs_err);
  rec_.max_rel_err = worst(rec_.max_rel_err, rel_err);
  ++rec_.trials;
}

void ErrorTracker::observe_deviation(double err) {
  rec_.max_abs_err = worst(rec_.max_abs_err, err);
  rec_.max_rel_err = worst(rec_.max_rel_err, err);
  ++rec_.trials;
}

void ErrorTracker::observe_flag(bool ok) {
  if (!ok) {
    failed_flag_ = true;
    rec_.max_abs_err = std::numeric_limits<double>::infinity();
    rec_.max_rel_err = std::numeric_limits<double>::infinity();
  }
  ++rec_.trials;
}

CheckRecord ErrorTracker::record() const {
  CheckRecord r = rec_;
  r.pass = !failed_flag_ && judged_pass(r);
  return r;
}

void Report::add(const CheckRecord& rec) {
  auto [it, inserted] = records_.try_emplace(rec.name, rec);
  if (inserted) return;
  CheckRecord& r = it->second;
  r.trials += rec.trials;
  r.max_abs_err = worst(r.max_abs_err, rec.max_abs_err);
  r.max_rel_err = worst(r.max_rel_err, rec.max_rel_err);
  r.tolerance = std::min(r.tolerance, rec.tolerance);
  r.pass = r.pass && rec.pass && judged_pass(r);
}

void Report::merge(const Report& other) {
  for (const auto& [name, rec] : other.records_) add(rec);
  for (const auto& n : other.notes_) {
    if (std::find(notes_.begin(), notes_.end(), n) == notes_.end()) notes_.push_back(n);
  }
  std::sort(notes_.begin(), notes_.end());
}

bool Report::pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const auto& kv) { return kv.second.pass; });
}

std::vector<CheckRecord> Report::checks() const {
  std::vector<CheckRecord> out;
  out.reserve(records_.size());
  for (const auto& [name, rec] : records_) out.push_back(rec);
  return out;
}

namespace {

nlohmann::json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json Report::to_json(bool with_timestamp) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, r] : records_) {
    checks.push_back({{"name", r.name},
                      {"trials", r.trials},
                      {"max_abs_err", number_or_string(r.max_abs_err)},
                      {"max_rel_err", number_or_string(r.max_rel_err)},
                      {"tolerance", r.tolerance},
                      {"mode", r.mode == ErrorMode::absolute ? "absolute" : "relative"},
                      {"pass", r.pass}});
  }
  nlohmann::json out = {{"suite", suite_},   {"seed", seed_}, {"config", config_},
                        {"checks", checks}, {"notes", notes_}, {"pass", pass()}};
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    out["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return out;
}

std::string Report::summary() const {
  std::ostringstream os;
  os.precision(3);
  for (const auto& [name, r] : records_) {
    os << (r.pass ? "PASS " : "FAIL ") << suite_ << '/' << r.name << "  trials=" << r.trials
       << "  max_abs=" << r.max_abs_err << "  max_rel=" << r.max_rel_err
       << "  tol=" << r.tolerance << (r.mode == ErrorMode::absolute ? " (abs)" : " (rel)")
       << '\n';
  }
  for (const auto& n : notes_) os << "NOTE " << suite_ << ": " << n << '\n';
  os << (pass() ? "PASS " : "FAIL ") << suite_ << '\n';
  return os.str();
}

}  // namespace fockrein
