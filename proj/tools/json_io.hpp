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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ait/binary_form.hpp"
#include "ait/etale.hpp"
#include "ait/matrix.hpp"
#include "json.hpp"

namespace ait::io {

using json = nlohmann::json;

/// Input that parses as JSON but does not match the expected shape.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rationals travel as strings "p/q" or "p"; integers are accepted on input.
Rational rational_from_json(const json& j, const std::string& what);
json to_json(const Rational& q);
json to_json(const Integer& z);

std::vector<Rational> vector_from_json(const json& j, const std::string& what);
json to_json(const std::vector<Rational>& v);

RatMatrix matrix_from_json(const json& j, const std::string& what);
json to_json(const RatMatrix& m);

/// Coefficients f_0, ..., f_n.
BinaryForm form_from_json(const json& j, const std::string& what);
json to_json(const BinaryForm& f);

/// Low-first coefficients.
json poly_to_json(const RatPoly& p);

/// Coordinates of an element in the power basis of its algebra.
AlgElement element_from_json(const AlgebraPtr& L, const json& j, const std::string& what);

/// "1,0,-1" or "1/2, 3".
std::vector<Rational> parse_rational_list(const std::string& text);

/// Required member of an object.
const json& member(const json& j, const std::string& key);

}  // namespace ait::io
