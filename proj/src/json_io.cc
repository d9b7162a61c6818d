// Copyright 2026 The linsecagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linsecagg/json_io.h"

#include <fstream>
#include <sstream>

#include "linsecagg/error.h"

namespace linsecagg {
namespace {

using nlohmann::json;

std::vector<std::vector<std::int64_t>> IntRows(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing key \"") + key + "\"");
  }
  const json& rows = doc.at(key);
  if (!rows.is_array()) {
    throw Error(ErrorCode::kParse, std::string("\"") + key + "\" must be an array of arrays");
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    if (!row.is_array()) {
      throw Error(ErrorCode::kParse, std::string("\"") + key + "\" row " +
                                         std::to_string(r) + " is not an array");
    }
    std::vector<std::int64_t> values;
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::kParse, std::string("\"") + key + "\" row " +
                                           std::to_string(r) + " has a non-integer entry");
      }
      values.push_back(v.get<std::int64_t>());
    }
    if (!out.empty() && values.size() != out.front().size()) {
      throw Error(ErrorCode::kParse, std::string("\"") + key + "\" is ragged at row " +
                                         std::to_string(r));
    }
    out.push_back(std::move(values));
  }
  return out;
}

}  // namespace

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": malformed JSON at byte " +
                                       std::to_string(e.byte) + ": " + e.what());
  }
}

RawInstance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "instance must be a JSON object");
  if (!doc.contains("q") || !doc.at("q").is_number_integer()) {
    throw Error(ErrorCode::kParse, "instance needs an integer \"q\"");
  }
  RawInstance raw;
  const std::int64_t q = doc.at("q").get<std::int64_t>();
  raw.q = q < 0 ? 0 : static_cast<std::uint64_t>(q);
  raw.f = IntRows(doc, "F");
  raw.g = IntRows(doc, "G");
  return raw;
}

Matrix EncoderFromJson(const json& doc, const FieldModulus& modulus) {
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "encoder must be a JSON object");
  std::vector<std::vector<std::int64_t>> rows = IntRows(doc, "P");
  for (const auto& row : rows) {
    for (std::int64_t v : row) {
      if (v < 0 || v >= static_cast<std::int64_t>(modulus.value())) {
        throw Error(ErrorCode::kParse, "encoder entry " + std::to_string(v) +
                                           " is outside [0, q)");
      }
    }
  }
  return Matrix::FromRows(modulus, rows);
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.ToRows()) rows.push_back(row);
  return rows;
}

json InstanceToJson(const Matrix& f, const Matrix& g) {
  return json{{"q", f.modulus().value()}, {"F", MatrixToJson(f)}, {"G", MatrixToJson(g)}};
}

json SetToJson(const IndexSet& set) { return json(set.members()); }

json SetsToJson(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const IndexSet& s : sets) out.push_back(SetToJson(s));
  return out;
}

json RatesToJson(const std::vector<Rational>& rates) {
  json out = json::array();
  for (const Rational& r : rates) out.push_back(FormatRational(r));
  return out;
}

json ElementsToJson(const std::vector<Element>& v) { return json(v); }

}  // namespace linsecagg
