// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON encodings of spaces, operators, regions and coherent data.
 *
 *     KreinSpace   {"signature": "++--"}            (whitespace ignored)
 *     KVector      [[re, im], ...]
 *     KOperator    {"linearity": "linear" | "conjugate-linear",
 *                   "matrix": [[[re, im], ...], ...]}
 *     Region       {"signature": ..., "u": <KOperator>}
 *     CoherentData {"lambda": <KOperator>, "xi": <KVector>}
 *     FockState    {"signature": ..., "coefficients": [[re, im], ...]}
 *                  with coefficient k belonging to the basis element whose
 *                  index set is the bit pattern of k.
 */

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fockrein/coherent.hpp"
#include "fockrein/error.hpp"
#include "fockrein/fock.hpp"
#include "fockrein/gbqft.hpp"
#include "fockrein/krein.hpp"

namespace fockrein {

/// Malformed or unreadable input file.
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

nlohmann::json to_json(const KreinSpace& space);
nlohmann::json to_json(const KVector& v);
nlohmann::json to_json(const KOperator& op);
nlohmann::json to_json(const Region& region);
nlohmann::json to_json(const CoherentData& data);
nlohmann::json to_json(const FockState& psi);

KreinSpace space_from_json(const nlohmann::json& j);
KVector vector_from_json(const nlohmann::json& j);
KOperator operator_from_json(const nlohmann::json& j);
Region region_from_json(const nlohmann::json& j);
CoherentData coherent_data_from_json(const nlohmann::json& j);
FockState state_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; failures become ParseError.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// "re im" with 17 significant digits in the classic locale.
std::string format_complex(Complex z);
std::string format_real(double x);

}  // namespace fockrein
