// Copyright 2026 The ehtp Authors
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

#pragma once

#include "json.hpp"

#include "elementary_operator.hpp"
#include "group.hpp"
#include "measure.hpp"
#include "representation.hpp"
#include "varopoulos.hpp"

namespace ehtp {

using nlohmann::json;

// Readers throw Error(kSchema) on malformed documents. Matrices are lists of
// rows; an entry is a number, [re, im] or {"re": .., "im": ..}.

GroupPtr group_from_json(const json& j, std::size_t max_order = kDefaultMaxOrder);
json to_json(const FiniteGroup& g);

Character character_from_json(const json& j);
json to_json(const Character& c);

Measure measure_from_json(const json& j, const GroupPtr& g);
json to_json(const Measure& mu);

Representation representation_from_json(const json& j, const GroupPtr& g);
json to_json(const Representation& pi);

ElementaryOperator operator_from_json(const json& j);
json to_json(const ElementaryOperator& t);

json to_json(const NormInterval& n);
json to_json(const VFunction& u);

Mat matrix_from_json(const json& j);
json matrix_to_json(const Mat& m);
cplx complex_from_json(const json& j);
json complex_to_json(cplx z);

}  // namespace ehtp
