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

// JSON shapes shared by the command-line tool and its tests.
//
//   instance file: {"q": 7, "F": [[...], ...], "G": [[...], ...]}
//   encoder file:  {"P": [[...], ...]}   (K rows of N entries in [0, q))
//
// Matrices are row-major integer arrays; rationals are "num/den" strings.

#ifndef LINSECAGG_JSON_IO_H_
#define LINSECAGG_JSON_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/matrix.h"
#include "linsecagg/rational.h"

namespace linsecagg {

// Reads and parses a file. Throws Error(kParse) with the byte offset of a
// syntax error, or when the file cannot be read.
nlohmann::json ReadJsonFile(const std::string& path);

// Throws Error(kParse) on missing keys, ragged or non-integer arrays.
RawInstance InstanceFromJson(const nlohmann::json& doc);
// Throws Error(kParse) on a malformed array or an entry outside [0, q).
Matrix EncoderFromJson(const nlohmann::json& doc, const FieldModulus& modulus);

nlohmann::json MatrixToJson(const Matrix& m);
nlohmann::json InstanceToJson(const Matrix& f, const Matrix& g);
nlohmann::json SetToJson(const IndexSet& set);
nlohmann::json SetsToJson(const std::vector<IndexSet>& sets);
nlohmann::json RatesToJson(const std::vector<Rational>& rates);
nlohmann::json ElementsToJson(const std::vector<Element>& v);

}  // namespace linsecagg

#endif  // LINSECAGG_JSON_IO_H_
