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

#include "upm/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace upm {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational rational_from_text(std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return Json(s.re().str());
  Json j = Json::object();
  j["re"] = s.re().str();
  j["im"] = s.im().str();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(rational_from_text(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Scalar(BigInt(j.get<std::uint64_t>()));
  if (j.is_object()) {
    if (j.size() != 2 || !j.contains("re") || !j.contains("im")) {
      throw ParseError("complex scalar must be an object with exactly the keys \"re\" and \"im\"");
    }
    const Json& re = j.at("re");
    const Json& im = j.at("im");
    if (!re.is_string() || !im.is_string()) throw ParseError("complex scalar components must be rational strings");
    return Scalar(rational_from_text(re.get<std::string>()), rational_from_text(im.get<std::string>()));
  }
  throw ParseError("scalar must be a rational string, an integer, or a {\"re\",\"im\"} object; got: " + j.dump());
}

Scalar parse_scalar(std::string_view text) {
  const std::string_view t = trimmed(text);
  if (t.empty()) throw ParseError("empty scalar");
  if (t.front() == '{') {
    Json j = Json::parse(t, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed complex scalar: '" + std::string(t) + "'");
    return scalar_from_json(j);
  }
  return Scalar(rational_from_text(t));
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '{') ++depth;
    if (i < text.size() && text[i] == '}') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_scalar(text.substr(begin, i - begin)));
      begin = i + 1;
    }
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      const std::string item(trimmed(text.substr(begin, i - begin)));
      begin = i + 1;
      if (item.empty()) throw ParseError("empty integer in list");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid integer: '" + item + "'");
      }
      if (used != item.size()) throw ParseError("invalid integer: '" + item + "'");
      out.push_back(value);
    }
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json j = Json::object();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix document needs \"rows\", \"cols\" and \"entries\"");
  }
  if (!j.at("rows").is_number_integer() && !j.at("rows").is_number_unsigned()) throw ParseError("\"rows\" must be an integer");
  if (!j.at("cols").is_number_integer() && !j.at("cols").is_number_unsigned()) throw ParseError("\"cols\" must be an integer");
  const auto rows = j.at("rows").get<std::int64_t>();
  const auto cols = j.at("cols").get<std::int64_t>();
  if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be at least 1x1");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
    throw ParseError("\"entries\" must be an array of `rows` rows");
  }
  std::vector<Scalar> flat;
  flat.reserve(static_cast<std::size_t>(rows * cols));
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      throw ParseError("each matrix row must list `cols` scalars");
    }
    for (const Json& cell : row) flat.push_back(scalar_from_json(cell));
  }
  return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(flat));
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_table(const Matrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = m(i, j).str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += "  ";
      out.append(width[j] - cells[i][j].size(), ' ');
      out += cells[i][j];
    }
    out += '\n';
  }
  return out;
}

namespace {

Json sequence_to_json(const std::vector<Scalar>& seq) {
  Json arr = Json::array();
  for (const Scalar& s : seq) arr.push_back(scalar_to_json(s));
  return arr;
}

std::vector<Scalar> sequence_from_json(const Json& j, const char* name) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string("\"") + name + "\" must be a non-empty array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const Json& cell : j) out.push_back(scalar_from_json(cell));
  return out;
}

}  // namespace

Json spec_to_json(const UniformSpec& s) {
  Json j = Json::object();
  j["k"] = s.k();
  j["ell"] = s.ell();
  j["x"] = sequence_to_json(s.x());
  j["y"] = sequence_to_json(s.y());
  j["r"] = sequence_to_json(s.r());
  return j;
}

UniformSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("ell") || !j.contains("x") || !j.contains("y") || !j.contains("r")) {
    throw ParseError("spec document needs \"k\", \"ell\", \"x\", \"y\" and \"r\"");
  }
  if (!j.at("k").is_number_integer() && !j.at("k").is_number_unsigned()) throw ParseError("\"k\" must be an integer");
  if (!j.at("ell").is_number_integer() && !j.at("ell").is_number_unsigned()) throw ParseError("\"ell\" must be an integer");
  return UniformSpec(j.at("k").get<int>(), j.at("ell").get<int>(), sequence_from_json(j.at("x"), "x"),
                     sequence_from_json(j.at("y"), "y"), sequence_from_json(j.at("r"), "r"));
}

Json poly_to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term = Json::object();
    term["exp"] = e;
    term["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(term));
  }
  Json j = Json::object();
  j["arity"] = p.arity();
  j["terms"] = std::move(terms);
  return j;
}

Json verdict_to_json(const RegularityVerdict& v) {
  Json j = Json::object();
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? scalar_to_json(*v.witness) : Json(nullptr);
  j["method"] = v.method;
  return j;
}

}  // namespace upm
