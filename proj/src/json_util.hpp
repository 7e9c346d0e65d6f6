// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTCAP_SRC_JSON_UTIL_HPP
#define ENTCAP_SRC_JSON_UTIL_HPP

#include <json.hpp>

#include "entcap/scenarios.hpp"
#include "entcap/sweep.hpp"

namespace entcap::detail {

using Json = nlohmann::ordered_json;

/// NaN and infinities become null.
Json number(double v);

Json method_json(const AveragingMethod &m);
AveragingMethod method_from_json(const Json &j);

Json config_json(const ScenarioConfig &c);
ScenarioConfig config_from_json(const Json &j);

Json row_json(const SweepRow &row);

}  // namespace entcap::detail

#endif
