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

// Parameter grids over a scenario, evaluated on a worker pool.

#ifndef ENTCAP_SWEEP_HPP
#define ENTCAP_SWEEP_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "entcap/scenarios.hpp"

namespace entcap {

inline constexpr std::size_t kMaxSweepAxes = 3;
inline constexpr std::size_t kMaxSweepPoints = 10'000'000;

enum class SweepParam {
    Lambda,
    Omega,
    CapitalLambda,
    ThetaMinus,
    /// cos(2 * mean_theta_minus), in [-1, 1].
    Zbar,
    Phi,
    /// e^{-lambda^2/2}, in (0, 1].
    A,
    /// e^{-2 omega^2}, in (0, 1].
    B,
};

std::string_view sweep_param_name(SweepParam p);
SweepParam parse_sweep_param(std::string_view name);

struct SweepAxis {
    SweepParam param = SweepParam::Lambda;
    double start = 0;
    double stop = 0;
    double step = 1;

    /// Parses "name=start:stop:step".
    static SweepAxis parse(std::string_view text);

    /// Points from start to stop inclusive; a stop that misses the lattice by
    /// less than 1e-9 steps still counts.
    std::size_t count() const;
    double value(std::size_t i) const;
    void validate() const;
};

enum class OutputFormat { Csv, Json };

std::string_view output_format_name(OutputFormat f);
OutputFormat parse_output_format(std::string_view name);

struct SweepGrid {
    ScenarioConfig base;
    /// The first axis varies slowest.
    std::vector<SweepAxis> axes;

    void validate() const;
    std::size_t size() const;
    /// Config of the point with the given row-major index, Monte Carlo seed
    /// included.
    ScenarioConfig point(std::size_t index) const;
};

struct SweepRow {
    ScenarioId id = ScenarioId::IsingTunable;
    double lambda = 0;
    double interaction_width = 0;
    /// NaN outside xyz-tunable.
    double zbar = 0;
    double phi = 0;
    Criterion predicate;
    double min_pt_eigenvalue = 0;
    double negativity = 0;
    double initial_entropy_bits = 0;
    std::string method;
};

SweepRow evaluate_point(const ScenarioConfig &c);

struct SweepTimings {
    double wall_ms = 0;
    /// Summed over workers.
    double preparation_ms = 0;
    double interaction_ms = 0;
    double analysis_ms = 0;
    double write_ms = 0;
};

/// Rows in grid order whatever the worker count. workers == 0 picks the
/// hardware concurrency.
std::vector<SweepRow> run_sweep(const SweepGrid &grid, unsigned workers = 0, SweepTimings *timings = nullptr);

std::string_view csv_header();
std::string csv_row(const SweepRow &row);
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const std::vector<SweepRow> &rows);

struct SweepOutput {
    std::string data_path;
    std::string manifest_path;
    std::size_t rows = 0;
    unsigned workers = 0;
    SweepTimings timings;
};

/// Runs the grid, writes the data file and `<path>.manifest.json`. Throws
/// Error(Io) when either file cannot be written.
SweepOutput sweep_to_file(const SweepGrid &grid, const std::string &path, OutputFormat format, unsigned workers = 0);

}  // namespace entcap

#endif
