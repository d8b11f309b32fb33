// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/fredholm.hpp"

#include <cmath>
#include <sstream>

#include "fockrein/error.hpp"

namespace fockrein {

namespace {
constexpr double kTermCutoff = 1e-15;
constexpr int kMaxTerms = 10000;
}  // namespace

TraceLogSeries trace_log_series(const CMatrix& a, const std::string& label) {
  if (a.rows() != a.cols()) throw UsageError("trace-log series needs a square matrix");
  const double norm = operator_norm(a);
  if (!(norm < 1.0)) {
    std::ostringstream msg;
    msg << "hypothesis violated: ||" << label << "||_op = " << norm << " >= 1";
    throw HypothesisViolation(msg.str(), norm);
  }
  const double root_dim = std::sqrt(static_cast<double>(a.rows()));
  TraceLogSeries out;
  CMatrix power = a;
  for (int k = 1; k <= kMaxTerms; ++k) {
    out.log_det -= power.trace() / static_cast<double>(k);
    out.terms = k;
    // |tr(A^j)| ≤ √d ‖A^j‖_F and ‖A^{j+1}‖_F ≤ ‖A‖_op ‖A^j‖_F, so this bounds every later term.
    if (root_dim * power.norm() * norm / static_cast<double>(k + 1) < kTermCutoff) break;
    power = power * a;
  }
  return out;
}

Complex sqrt_det_one_minus(const CMatrix& a, const std::string& label) {
  return std::exp(0.5 * trace_log_series(a, label).log_det);
}

}  // namespace fockrein
