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

// Noisy control angles and the noise-averaged state E[rho(angle)].
//
// Every family produced by the gates in this library is a trigonometric
// polynomial in the angle, rho(a) = sum_t e^{i t a} C_t, so the average is
// exactly sum_t E[e^{i t a}] C_t. Quadrature and Monte Carlo evaluate the
// same average by sampling rho(a) directly and serve as independent checks.

#ifndef ENTCAP_NOISECHAN_HPP
#define ENTCAP_NOISECHAN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "entcap/smallmat.hpp"

namespace entcap {

enum class DistributionKind { Gaussian, Laplace };

/// Distribution of a control angle around its target `mean`.
///
/// For Gaussian noise `width` is the standard deviation. For Laplace noise it
/// is the scale w of the density (1/4w) exp(-|a - mean| / 2w), whose standard
/// deviation is 2*sqrt(2)*w. A zero width is a deterministic angle.
struct AngleDistribution {
    DistributionKind kind = DistributionKind::Gaussian;
    double mean = 0;
    double width = 0;

    static AngleDistribution gaussian(double mean, double sd);
    static AngleDistribution laplace(double mean, double scale);

    bool deterministic() const {
        return width == 0;
    }
};

struct ClosedForm {};
struct Quadrature {
    /// Gauss-Hermite nodes for Gaussian noise; odd, at least 3.
    std::size_t nodes = 61;
    /// Gauss-Laguerre nodes per half-line for Laplace noise.
    std::size_t laguerre_nodes = 64;
};
struct MonteCarlo {
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

using AveragingMethod = std::variant<ClosedForm, Quadrature, MonteCarlo>;

/// Throws on an even or too small Gauss-Hermite count, a Gauss-Laguerre count
/// outside [1, 400], or zero samples.
void validate_method(const AveragingMethod &m);

/// "closed-form", "quadrature-61", "monte-carlo-1000000". Quadrature reports
/// the node count of the rule used for `kind`.
std::string method_label(const AveragingMethod &m, DistributionKind kind = DistributionKind::Gaussian);

/// Monte Carlo methods get an independent substream per pipeline stage; other
/// methods are returned unchanged.
AveragingMethod method_for_stage(const AveragingMethod &m, std::uint64_t stage);

using Rng = std::mt19937_64;

/// Generator seeded from (seed, index) through splitmix64, so parallel tasks
/// get reproducible streams independent of scheduling.
Rng substream(std::uint64_t seed, std::uint64_t index);

/// E[e^{i t a}].
Complex characteristic_weight(const AngleDistribution &d, double t);

double sample_angle(const AngleDistribution &d, Rng &rng);

struct Harmonic {
    double multiplier = 0;
    Mat4 coefficient;
};

/// An angle-indexed family of states a -> rho(a).
///
/// A family may carry its harmonic expansion, a direct evaluator, or both.
/// Closed-form averaging needs the harmonics; quadrature and Monte Carlo
/// prefer the evaluator when present.
class StateFamily {
  public:
    using Evaluator = std::function<Mat4(double)>;

    /// Requires C_{-t} = C_t^dagger within 1e-12 for every term.
    static StateFamily from_harmonics(std::vector<Harmonic> terms);
    static StateFamily from_evaluator(Evaluator f);
    static StateFamily from_both(std::vector<Harmonic> terms, Evaluator f);

    Mat4 at(double angle) const;

    bool has_harmonics() const {
        return harmonics_.has_value();
    }
    std::span<const Harmonic> harmonics() const;

  private:
    std::optional<std::vector<Harmonic>> harmonics_;
    Evaluator evaluator_;
};

/// rho -> U(a) rho U(a)^dagger for a unitary that depends on one angle.
struct AngleGate {
    /// Direct evaluation of U(a).
    std::function<Mat4(double)> unitary;
    /// Set when U(a) = exp(-i a generator); harmonics then come from its spectrum.
    std::optional<Mat4> generator;
    /// Without a generator the harmonics are fitted on a uniform grid and
    /// must satisfy |2t| <= this bound.
    int max_twice_multiplier = 4;
};

StateFamily gate_family(const DensityMatrix &rho, const AngleGate &gate);

/// E[rho(a)] for a ~ d. Drift in Hermiticity or trace above 1e-12 (1e-10 for
/// Monte Carlo) is reported as NumericalFailure rather than repaired.
DensityMatrix average_state(const StateFamily &f, const AngleDistribution &d, const AveragingMethod &m);

/// average_state(gate_family(rho, gate), d, m).
DensityMatrix apply_noisy_gate(const DensityMatrix &rho, const AngleGate &gate, const AngleDistribution &d,
                               const AveragingMethod &m);

}  // namespace entcap

#endif
