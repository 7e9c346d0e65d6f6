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

// Closed-form inseparability criteria for noisy exchange gates.
//
// Every criterion reports a signed margin: positive on the entangled side,
// negative on the separable side. The criteria are strict inequalities, so
// a margin of exactly zero is not entangled; it falls inside the band
// |margin| <= kBoundaryBand that is reported as Boundary.

#ifndef ENTCAP_PREDICATES_HPP
#define ENTCAP_PREDICATES_HPP

#include <string_view>

namespace entcap {

inline constexpr double kBoundaryBand = 1e-12;

enum class Region { Entangled, Separable, Boundary };

std::string_view region_name(Region r);

struct Criterion {
    Region region = Region::Separable;
    double margin = 0;
};

/// Classifies a margin with the shared boundary band.
Criterion classify_margin(double margin);

// --- Ising, Gaussian noise -------------------------------------------------

/// e^{-l^2} + 2 e^{-(l^2 + W^2/4)/2} > 1 for preparation sd l and
/// interaction sd W.
Criterion ising_gaussian_entangled(double lambda, double omega);

/// Largest preparation sd that still entangles at interaction sd `omega`.
double ising_lambda_max(double omega);

/// Always-on Ising: the tunable criterion with W replaced by 2*Lambda.
Criterion untunable_ising_entangled(double lambda, double capital_lambda);

// --- XYZ, tunable ------------------------------------------------------------

class XyzReducedParams {
  public:
    /// a = e^{-l^2/2}, b = e^{-2 W^2}, z = cos(2 * mean_theta_minus); requires
    /// a, b in (0, 1] and |z| <= 1.
    XyzReducedParams(double a, double b, double z);

    static XyzReducedParams from_noise(double lambda, double omega, double mean_theta_minus);

    double a() const {
        return a_;
    }
    double b() const {
        return b_;
    }
    double z() const {
        return z_;
    }

  private:
    double a_, b_, z_;
};

/// |z| > sqrt(1/b^2 - (1+a)^2/(1-a)^2). The margin is z^2 minus the radicand
/// (+inf when a == 1).
Criterion xyz_entangled(const XyzReducedParams &p);

/// b > (1-a)/(1+a): entangled whatever z is.
bool xyz_sufficiently_entangled(double a, double b);

/// b < (1-a)/sqrt(2(1+a^2)): separable whatever z is.
bool xyz_sufficiently_separable(double a, double b);

// --- XY / XXZ / Heisenberg, tunable -----------------------------------------

/// Mixture weights of |00> and the two maximally entangled states of the
/// {|01>,|10>} block.
struct XyFamilyWeights {
    double w00 = 0;
    double w_plus = 0;
    double w_minus = 0;
};

XyFamilyWeights xy_family_weights(double lambda, double omega);

/// Entangled whenever the two block weights differ; margin w_minus - w_plus.
Criterion xy_family_entangled(double lambda, double omega);

// --- XYZ, untunable ----------------------------------------------------------

class UntunableXyzParams {
  public:
    /// mu = e^{-Lambda^2/2}, eta = e^{-l^2/2}, delta = (Jx - Jy)/(Jx + Jy).
    UntunableXyzParams(double mu, double eta, double delta);

    static UntunableXyzParams from_noise(double capital_lambda, double lambda, double delta);

    double mu() const {
        return mu_;
    }
    double eta() const {
        return eta_;
    }
    double delta() const {
        return delta_;
    }
    double beta() const;
    double delta_small() const;
    double A() const;
    double B() const;
    double C() const;
    double D() const;

  private:
    double mu_, eta_, delta_;
};

/// (A + B mu)^2 (1 - eta)^2 (C mu - D)^2 - mu^4 (1 + eta)^2 / 4; negative
/// means entangled.
double untunable_xyz_lhs(const UntunableXyzParams &p);

/// Margin is -untunable_xyz_lhs.
Criterion untunable_xyz_entangled(const UntunableXyzParams &p);

// --- Ising, Laplace noise ----------------------------------------------------

/// 4 l^2 (W^2 + 2 l^2 + 2 l^2 W^2) < 1 for Laplace scales l, W. Applies to the
/// tunable and the refocused case alike.
Criterion ising_laplace_entangled(double lambda, double omega);

/// 0.5 * sqrt((sqrt(1 + (1 + W^2)^2) - W^2) / (1 + W^2)).
double laplace_lambda_bound(double omega);

}  // namespace entcap

#endif
