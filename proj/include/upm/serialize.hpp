/*
   Copyright 2026 The upm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "upm/matrix.hpp"
#include "upm/rational.hpp"
#include "upm/schur.hpp"
#include "upm/uniform.hpp"

namespace upm {

/// Malformed textual/JSON input. Everything scalars cross the I/O boundary
/// as is exact strings; floats are rejected, never rounded.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Output JSON preserves insertion order, so documents serialize to stable,
/// byte-identical text.
using Json = nlohmann::ordered_json;

// Scalars: "p" / "p/q" as JSON strings, Gaussian values as {"re","im"}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// Accepts the rational grammar directly or an inline JSON object for
/// Gaussian values.
Scalar parse_scalar(std::string_view text);

/// Comma-separated scalars; commas inside {...} belong to the complex
/// object, not the list.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Comma-separated plain integers (partition parts, exponent tuples).
std::vector<int> parse_int_list(std::string_view text);

// Matrices: {"rows": r, "cols": c, "entries": [[scalar,...],...]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
std::string matrix_to_csv(const Matrix& m);
std::string matrix_to_table(const Matrix& m);

// Specs: {"k": k, "ell": ell, "x": [...], "y": [...], "r": [...]}.
Json spec_to_json(const UniformSpec& s);
UniformSpec spec_from_json(const Json& j);

// Polynomials: {"arity": k, "terms": [{"exp": [...], "coeff": s}, ...]}
// with terms in graded-lexicographic order.
Json poly_to_json(const SparsePolynomial& p);

// Verdicts: {"status": s, "witness": scalar|null, "method": m}.
Json verdict_to_json(const RegularityVerdict& v);

}  // namespace upm
