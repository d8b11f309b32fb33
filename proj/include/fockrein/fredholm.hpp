// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "fockrein/krein.hpp"

namespace fockrein {

struct TraceLogSeries {
  Complex log_det = 0.0;  ///< Σ_k −tr(A^k)/k
  int terms = 0;
};

/// Σ_k −tr(A^k)/k for ‖A‖_op < 1, stopped once the bound √d·‖A^k‖_F / k on the
/// next term drops below 1e-15 (at most 10^4 terms).
/// Throws HypothesisViolation when ‖A‖_op ≥ 1.
TraceLogSeries trace_log_series(const CMatrix& a, const std::string& label = "A");

/// det(1 − A)^{1/2} on the branch fixed by the trace-log series,
/// exp(½ Σ_k −tr(A^k)/k).
Complex sqrt_det_one_minus(const CMatrix& a, const std::string& label = "A");

}  // namespace fockrein
