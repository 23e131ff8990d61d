/*
 * Copyright 2026 The aitk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "json_io.hpp"

#include <sstream>

namespace ait::io {

const json& member(const json& j, const std::string& key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object holding '" + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + key + "'");
  return *it;
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) throw SchemaError(what + ": expected a rational as a string like \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return to_string(z); }

std::vector<Rational> vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return v;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

RatMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw SchemaError(what + ": expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], what + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) throw SchemaError(what + ": ragged rows");
  }
  return RatMatrix::from_rows(rows);
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

BinaryForm form_from_json(const json& j, const std::string& what) {
  auto c = vector_from_json(j, what);
  if (c.size() < 2) throw SchemaError(what + ": a binary form needs at least two coefficients");
  return BinaryForm(std::move(c));
}

json to_json(const BinaryForm& f) { return to_json(f.coeffs()); }

json poly_to_json(const RatPoly& p) { return to_json(p.coeffs()); }

AlgElement element_from_json(const AlgebraPtr& L, const json& j, const std::string& what) {
  auto c = vector_from_json(j, what);
  if (static_cast<int>(c.size()) != L->degree()) {
    throw SchemaError(what + ": expected " + std::to_string(L->degree()) + " coordinates");
  }
  return L->from_coords(std::move(c));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

}  // namespace ait::io
