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

// End-to-end noisy entangling pipelines starting from |00>.
//
//  ising-tunable            y-rotations of both qubits, angles ~ (pi/2, l)
//                           each and independent, then exp(-i a SzSz) with
//                           a ~ (pi, W).
//  ising-untunable          same preparation, then the refocused always-on
//                           Ising evolution with a noisy pulse angle
//                           ~ (pi, Lambda) (or noisy segment durations).
//  xyz-tunable              x-rotation of qubit 2 ~ (pi, l), then
//                           exp[-i(tx XX + ty YY + phi ZZ)] with
//                           tx + ty ~ (pi/4, W) and tx - ty ~ (mean, W)
//                           independent. These angles multiply Pauli
//                           products, not spin operators.
//  xy-family                same preparation, then exp[-i j (SxSx + SySy)]
//                           with j ~ (pi/4, W).
//  ising-laplace,           the Ising pipelines with Laplace noise on every
//  ising-untunable-laplace  angle.

#ifndef ENTCAP_SCENARIOS_HPP
#define ENTCAP_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "entcap/entangle.hpp"
#include "entcap/hamiltonians.hpp"
#include "entcap/noisechan.hpp"
#include "entcap/predicates.hpp"

namespace entcap {

enum class ScenarioId {
    IsingTunable,
    IsingUntunable,
    XyzTunable,
    XyFamilyTunable,
    IsingTunableLaplace,
    IsingUntunableLaplace,
};

std::string_view scenario_name(ScenarioId id);
/// Throws InvalidArgument on an unknown name.
ScenarioId parse_scenario(std::string_view name);
std::span<const ScenarioId> all_scenarios();

bool uses_laplace_noise(ScenarioId id);
bool is_untunable(ScenarioId id);

enum class RefocusNoise {
    /// Pulse angle ~ (pi, Lambda), segment durations exact.
    PulseAngle,
    /// Exact pi pulse; J tau1 and J tau2 independent with width Lambda/sqrt(2)
    /// each, so Lambda^2 = Lambda_1^2 + Lambda_2^2.
    Duration,
};

std::string_view refocus_noise_name(RefocusNoise n);
RefocusNoise parse_refocus_noise(std::string_view name);

struct ScenarioConfig {
    ScenarioId id = ScenarioId::IsingTunable;
    /// l: preparation noise width.
    double prep_width = 0;
    /// W for tunable scenarios, Lambda for the refocused ones.
    double interaction_width = 0;
    /// xyz-tunable only; defaults to 0.
    std::optional<double> mean_theta_minus;
    /// xyz-tunable only; defaults to 0.
    std::optional<double> phi;
    AveragingMethod method = ClosedForm{};
    RefocusSchedule refocus = RefocusSchedule::standard();
    RefocusNoise refocus_noise = RefocusNoise::PulseAngle;

    void validate() const;
};

struct ScenarioTimings {
    double preparation_ms = 0;
    double interaction_ms = 0;
    double analysis_ms = 0;
};

struct ScenarioResult {
    DensityMatrix final_state;
    EntanglementVerdict verdict;
    Criterion predicate;
    double initial_entropy_bits = 0;
    std::string method;
    std::optional<std::uint64_t> seed;
    ScenarioTimings timings;
};

DensityMatrix prepare_initial(ScenarioId id, double prep_width, const AveragingMethod &m);

/// Preparation followed by the noisy interaction.
DensityMatrix simulate(const ScenarioConfig &c);

/// Closed-form criterion matching the scenario.
Criterion predicate_for(const ScenarioConfig &c);

ScenarioResult run_scenario(const ScenarioConfig &c);

/// xyz-tunable state computed with theta_x and theta_y drawn independently,
/// each with width W/sqrt(2), instead of through theta_plus and theta_minus.
DensityMatrix xyz_independent_axes_state(const ScenarioConfig &c);

/// Weight of |00> and the two eigenvalues of the {|01>,|10>} block, ascending.
XyFamilyWeights xy_family_populations(const DensityMatrix &rho);

enum class BoundaryAxis { PrepWidth, InteractionWidth };

std::string_view boundary_axis_name(BoundaryAxis a);
BoundaryAxis parse_boundary_axis(std::string_view name);

struct BoundaryReport {
    ScenarioId id = ScenarioId::IsingTunable;
    BoundaryAxis axis = BoundaryAxis::PrepWidth;
    double lo = 0;
    double hi = 0;
    /// Where the simulated state's minimal partial-transpose eigenvalue
    /// changes sign.
    double threshold = 0;
    /// Matching threshold of the closed-form criterion, when one exists in
    /// the bracket.
    std::optional<double> closed_form;
    std::optional<double> deviation;
    int iterations = 0;
};

/// Bisects the simulated pipeline along `axis` with every other parameter
/// taken from `base`. Throws NoSignChange when the bracket ends agree.
BoundaryReport boundary_bisect(const ScenarioConfig &base, BoundaryAxis axis, double lo, double hi,
                               double tolerance = 1e-6);

struct ValidationRequest {
    ScenarioId id = ScenarioId::IsingTunable;
    /// Averaging used for the simulated side.
    AveragingMethod method = Quadrature{};
    /// Random points when > 0, else a grid_points x grid_points grid.
    std::size_t samples = 0;
    std::size_t grid_points = 20;
    std::uint64_t seed = 42;
    /// Points with |predicate margin| <= guard are not compared.
    double guard = 1e-3;
    std::pair<double, double> prep_range{0, 3};
    std::pair<double, double> interaction_range{0, 3};
    std::pair<double, double> theta_minus_range{0, 3.141592653589793};
    double phi = 0;
    /// xy-family: Monte Carlo weights at one point against the closed form.
    std::size_t weight_samples = 1'000'000;
    double weights_lambda = 1;
    double weights_omega = 1;
    double weight_tolerance = 2e-3;
    RefocusSchedule refocus = RefocusSchedule::standard();
    RefocusNoise refocus_noise = RefocusNoise::PulseAngle;
};

struct ValidationReport {
    std::string scenario;
    std::string method;
    std::size_t points = 0;
    std::size_t compared = 0;
    std::size_t skipped = 0;
    std::size_t disagreements = 0;
    /// Largest |margin| among disagreeing points (0 when none).
    double max_disagreement_margin = 0;
    /// Smallest |margin| among compared points.
    double min_compared_margin = 0;
    /// xy-family only.
    std::optional<double> max_weight_deviation;
    std::optional<XyFamilyWeights> weights_expected;
    std::optional<XyFamilyWeights> weights_simulated;
    double predicate_ms = 0;
    double simulation_ms = 0;
};

ValidationReport validate(const ValidationRequest &r);

}  // namespace entcap

#endif
