// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/io.hpp"

#include <fstream>
#include <locale>
#include <sstream>

namespace fockrein {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const KreinSpace& space) { return {{"signature", space.to_string()}}; }

json to_json(const KVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json to_json(const KOperator& op) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < op.matrix().cols(); ++c) {
      row.push_back(complex_to_json(op.matrix()(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"linearity", op.is_linear() ? "linear" : "conjugate-linear"}, {"matrix", rows}};
}

json to_json(const Region& region) {
  return {{"signature", region.boundary().to_string()}, {"u", to_json(region.u())}};
}

json to_json(const CoherentData& data) {
  return {{"lambda", to_json(data.lambda)}, {"xi", to_json(data.xi)}};
}

json to_json(const FockState& psi) {
  return {{"signature", psi.space().to_string()}, {"coefficients", to_json(psi.coefficients())}};
}

KreinSpace space_from_json(const json& j) {
  const json& sig = field(j, "signature");
  if (!sig.is_string()) throw ParseError("signature must be a string");
  try {
    return KreinSpace::parse(sig.get<std::string>());
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

KVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a vector as [[re, im], ...]");
  KVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

KOperator operator_from_json(const json& j) {
  const json& lin = field(j, "linearity");
  const json& mat = field(j, "matrix");
  Linearity linearity;
  if (lin == "linear") {
    linearity = Linearity::linear;
  } else if (lin == "conjugate-linear") {
    linearity = Linearity::conjugate_linear;
  } else {
    throw ParseError("linearity must be \"linear\" or \"conjugate-linear\"");
  }
  if (!mat.is_array()) throw ParseError("matrix must be an array of rows");
  const auto n = static_cast<Eigen::Index>(mat.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = mat[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return {std::move(m), linearity};
}

Region region_from_json(const json& j) {
  return Region::make(space_from_json(j), operator_from_json(field(j, "u")));
}

CoherentData coherent_data_from_json(const json& j) {
  return {operator_from_json(field(j, "lambda")), vector_from_json(field(j, "xi"))};
}

FockState state_from_json(const json& j) {
  const KreinSpace space = space_from_json(j);
  const KVector c = vector_from_json(field(j, "coefficients"));
  if (space.dim() > kMaxFockDim || c.size() != (Eigen::Index{1} << space.dim())) {
    throw ParseError("coefficient count must be 2^dim");
  }
  return {space, c};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string format_real(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  std::string out = os.str();
  if (out.find_first_of(".eninf") == std::string::npos) out += ".0";
  return out;
}

std::string format_complex(Complex z) { return format_real(z.real()) + " " + format_real(z.imag()); }

}  // namespace fockrein
