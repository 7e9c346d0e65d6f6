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

// Diagonal exchange Hamiltonians H = sum_a J_a S_a^1 S_a^2, single-qubit
// pulses, and the refocusing algebra for always-on Ising coupling.
//
// Angles are the dimensionless products J*tau in radians. Unless a function
// says otherwise they multiply spin operators S = sigma/2.

#ifndef ENTCAP_HAMILTONIANS_HPP
#define ENTCAP_HAMILTONIANS_HPP

#include <numbers>
#include <string_view>

#include "entcap/smallmat.hpp"

namespace entcap {

enum class ExchangeModel { Ising, XY, XXZ, Heisenberg, XYZ };

std::string_view model_name(ExchangeModel model);

struct ExchangeCouplings {
    double jx = 0;
    double jy = 0;
    double jz = 0;

    /// Exact comparisons on the stored values.
    ExchangeModel classify() const;
};

struct ExchangeAngles {
    double theta_x = 0;
    double theta_y = 0;
    double phi = 0;

    double theta_plus() const {
        return theta_x + theta_y;
    }
    double theta_minus() const {
        return theta_x - theta_y;
    }

    /// Converts angles that multiply Pauli products (exp[-i(tx XX + ty YY + p ZZ)])
    /// into spin-operator angles.
    static ExchangeAngles from_pauli_units(double theta_x, double theta_y, double phi) {
        return {4 * theta_x, 4 * theta_y, 4 * phi};
    }
};

/// Always-on Ising refocusing: free evolution for J*tau1, a pulse exp(-i angle
/// S_x^1), free evolution for J*(tau2 - tau1), and the inverse pulse.
class RefocusSchedule {
  public:
    /// Requires 2*j_tau1 - j_tau2 == pi (within 1e-12) and j_tau2 != j_tau1.
    RefocusSchedule(double j_tau1, double j_tau2, double pulse_angle = std::numbers::pi);

    /// (3pi/4, pi/2) with a pi pulse.
    static RefocusSchedule standard();

    double j_tau1() const {
        return j_tau1_;
    }
    double j_tau2() const {
        return j_tau2_;
    }
    double pulse_angle() const {
        return pulse_angle_;
    }

    /// Same mean schedule with a different (possibly noisy) pulse angle.
    RefocusSchedule with_pulse_angle(double angle) const;

  private:
    double j_tau1_;
    double j_tau2_;
    double pulse_angle_;
};

struct PulseSpec {
    Axis axis = Axis::X;
    int qubit = 1;
    double angle = 0;
};

Mat4 exchange_hamiltonian(const ExchangeCouplings &c);

/// exp(-i (theta_x SxSx + theta_y SySy + phi SzSz)) assembled from its two
/// invariant blocks. {|01>,|10>} mixes through theta_plus with phase
/// e^{+i phi/4}; {|00>,|11>} mixes through theta_minus with phase e^{-i phi/4}.
Mat4 exchange_unitary(const ExchangeAngles &a);

/// exp(-i angle S_axis) on one qubit, identity on the other.
Mat4 pulse_unitary(const PulseSpec &p);

/// An su(2) triple with [x, y] = i z and cyclic permutations.
template <std::size_t N>
struct SuTriple {
    SquareMatrix<N> z;
    SquareMatrix<N> x;
    SquareMatrix<N> y;
};

/// (S_z, S_x, S_y) of one qubit embedded in the two-qubit space.
SuTriple<4> spin_triple(int qubit);
SuTriple<2> spin_triple();

/// exp(-i angle Z) X exp(i angle Z), which equals X cos(angle) + Y sin(angle).
/// Rejects triples whose commutators are off by more than 1e-10.
template <std::size_t N>
SquareMatrix<N> conjugate_generator(double angle, const SuTriple<N> &triple);

/// Net unitary of the schedule with its own pulse angle.
Mat4 refocused_unitary(const RefocusSchedule &s);

/// Same product for raw segment angles; used when the segment durations
/// themselves are noisy and the mean-schedule constraint no longer holds.
Mat4 refocus_product(double j_tau1, double j_tau2, double pulse_angle);

}  // namespace entcap

#endif
