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

// JSON documents for results, reports and sweep manifests. Field names are
// stable and listed in README.md.

#ifndef ENTCAP_REPORT_HPP
#define ENTCAP_REPORT_HPP

#include <chrono>
#include <string>
#include <string_view>

#include "entcap/scenarios.hpp"
#include "entcap/sweep.hpp"

namespace entcap {

std::string_view version();

std::string config_report(const ScenarioConfig &c);
std::string verdict_report(const ScenarioConfig &c, const ScenarioResult &r);
std::string boundary_report(const BoundaryReport &r);
std::string validation_report(const ValidationReport &r);

std::string sweep_manifest(const SweepGrid &grid, const SweepOutput &out, OutputFormat format,
                           std::chrono::system_clock::time_point started);

/// Grid recorded in a manifest, for re-running a sweep.
SweepGrid grid_from_manifest(std::string_view manifest_json);

}  // namespace entcap

#endif
