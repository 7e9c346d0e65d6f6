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

// Exact-size complex linear algebra for one and two qubits.
//
// Two-qubit operators use the basis {|00>, |01>, |10>, |11>} with qubit 1 as
// the left (most significant) tensor factor.

#ifndef ENTCAP_SMALLMAT_HPP
#define ENTCAP_SMALLMAT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "entcap/error.hpp"

namespace entcap {

using Complex = std::complex<double>;

/// Tolerances shared by every module.
namespace tol {
inline constexpr double kOperator = 1e-10;     // default operator comparisons
inline constexpr double kHermitian = 1e-12;    // density matrix Hermiticity
inline constexpr double kTrace = 1e-12;        // density matrix unit trace
inline constexpr double kNegativeEig = 1e-10;  // density matrix positivity
}  // namespace tol

/// Rejects NaN/Inf components.
Complex make_complex(double re, double im);

template <std::size_t N>
class SquareMatrix {
  public:
    static constexpr std::size_t kDim = N;

    SquareMatrix() = default;

    /// Row-major entries.
    explicit SquareMatrix(const std::array<Complex, N * N> &entries) : a_(entries) {
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }

    static SquareMatrix diagonal(const std::array<Complex, N> &d) {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = d[k];
        }
        return m;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return a_[r * N + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return a_[r * N + c];
    }

    std::span<const Complex, N * N> entries() const {
        return a_;
    }

    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                m(c, r) = std::conj((*this)(r, c));
            }
        }
        return m;
    }

    SquareMatrix transpose() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                m(c, r) = (*this)(r, c);
            }
        }
        return m;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    SquareMatrix &operator+=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            a_[k] += o.a_[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            a_[k] -= o.a_[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Complex s) {
        for (auto &x : a_) {
            x *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
        return a += b;
    }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
        return a -= b;
    }
    friend SquareMatrix operator-(SquareMatrix a) {
        return a *= -1.0;
    }
    friend SquareMatrix operator*(SquareMatrix a, Complex s) {
        return a *= s;
    }
    friend SquareMatrix operator*(Complex s, SquareMatrix a) {
        return a *= s;
    }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t k = 0; k < N; k++) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < N; c++) {
                    m(r, c) += ark * b(k, c);
                }
            }
        }
        return m;
    }

    bool operator==(const SquareMatrix &) const = default;

  private:
    std::array<Complex, N * N> a_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Frobenius norm of `a - b`; an upper bound on the operator-norm distance.
template <std::size_t N>
double distance(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    double s = 0;
    for (std::size_t r = 0; r < N; r++) {
        for (std::size_t c = 0; c < N; c++) {
            s += std::norm(a(r, c) - b(r, c));
        }
    }
    return std::sqrt(s);
}

template <std::size_t N>
bool approx_equal(const SquareMatrix<N> &a, const SquareMatrix<N> &b, double tolerance = tol::kOperator) {
    return distance(a, b) <= tolerance;
}

template <std::size_t N>
bool is_hermitian(const SquareMatrix<N> &m, double tolerance = tol::kOperator) {
    return distance(m, m.adjoint()) <= tolerance;
}

template <std::size_t N>
bool is_unitary(const SquareMatrix<N> &m, double tolerance = tol::kOperator) {
    return distance(m * m.adjoint(), SquareMatrix<N>::identity()) <= tolerance;
}

/// Tensor product with `a` acting on qubit 1.
Mat4 kron(const Mat2 &a, const Mat2 &b);

enum class Axis { X, Y, Z };

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 of(Axis axis);
}  // namespace pauli

/// Angular momentum operator S = sigma / 2.
Mat2 spin(Axis axis);

/// Embeds a single-qubit operator on qubit 1 or 2.
Mat4 on_qubit(const Mat2 &op, int qubit);

/// S_axis (x) S_axis.
Mat4 spin_spin(Axis axis);

template <std::size_t N>
struct HermitianSpectrum {
    /// Ascending.
    std::array<double, N> eigenvalues{};
    /// Column k is the eigenvector of eigenvalues[k]; its first non-negligible
    /// component is real and positive.
    SquareMatrix<N> vectors;

    std::array<Complex, N> eigenvector(std::size_t k) const {
        std::array<Complex, N> v;
        for (std::size_t r = 0; r < N; r++) {
            v[r] = vectors(r, k);
        }
        return v;
    }

    SquareMatrix<N> reconstruct() const {
        std::array<Complex, N> d;
        for (std::size_t k = 0; k < N; k++) {
            d[k] = eigenvalues[k];
        }
        return vectors * SquareMatrix<N>::diagonal(d) * vectors.adjoint();
    }
};

/// Cyclic complex Jacobi. Rejects input that is not Hermitian within 1e-10.
template <std::size_t N>
HermitianSpectrum<N> hermitian_eigensystem(const SquareMatrix<N> &h);

/// exp(-i * angle_scale * h) for Hermitian h.
template <std::size_t N>
SquareMatrix<N> unitary_exp(const SquareMatrix<N> &h, double angle_scale);

/// A two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
  public:
    /// Throws unless `m` satisfies the invariants within the tol:: bounds.
    explicit DensityMatrix(const Mat4 &m);

    /// Symmetrizes and renormalizes `m` provided the Hermiticity and trace
    /// drift are both within `drift`; throws NumericalFailure otherwise.
    static DensityMatrix repaired(const Mat4 &m, double drift = 1e-12);

    /// |psi><psi| for a normalized amplitude vector.
    static DensityMatrix pure(const std::array<Complex, 4> &amplitudes);
    /// |k><k| for computational basis index k in [0, 4).
    static DensityMatrix basis(std::size_t k);
    static DensityMatrix maximally_mixed();
    /// rho_a (x) rho_b from single-qubit density operators.
    static DensityMatrix product(const Mat2 &a, const Mat2 &b);

    const Mat4 &matrix() const {
        return m_;
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return m_(r, c);
    }

  private:
    struct Unchecked {};
    DensityMatrix(const Mat4 &m, Unchecked) : m_(m) {
    }
    Mat4 m_;
};

/// u rho u^dagger. Rejects non-unitary u.
DensityMatrix evolve(const DensityMatrix &rho, const Mat4 &u);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Tr(rho^2).
double purity(const DensityMatrix &rho);

}  // namespace entcap

#endif
