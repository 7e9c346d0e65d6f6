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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entcap/entangle.hpp"
#include "entcap/error.hpp"
#include "support.hpp"

namespace entcap {
namespace {

const double kHalf = std::sqrt(0.5);

DensityMatrix bell() {
    return DensityMatrix::pure({kHalf, 0.0, 0.0, kHalf});
}

DensityMatrix xi_state() {
    const Complex i{0, 1};
    return DensityMatrix::pure({0.5, 0.5 * i, 0.5 * i, 0.5});
}

// Eigenvalues of a Hermitian 4x4 through the characteristic polynomial
// bracketed by Gershgorin bounds; independent of the Jacobi solver.
std::array<double, 4> spectrum_by_bisection(const Mat4 &m) {
    auto det_shifted = [&](double x) {
        Mat4 a = m - Mat4::identity() * Complex(x);
        // Laplace expansion of the 4x4 determinant.
        auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0, std::size_t c1, std::size_t c2) {
            return a(r0, c0) * (a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1)) -
                   a(r0, c1) * (a(r1, c0) * a(r2, c2) - a(r1, c2) * a(r2, c0)) +
                   a(r0, c2) * (a(r1, c0) * a(r2, c1) - a(r1, c1) * a(r2, c0));
        };
        Complex d = a(0, 0) * det3(1, 2, 3, 1, 2, 3) - a(0, 1) * det3(1, 2, 3, 0, 2, 3) +
                    a(0, 2) * det3(1, 2, 3, 0, 1, 3) - a(0, 3) * det3(1, 2, 3, 0, 1, 2);
        return d.real();
    };
    std::array<double, 4> roots{};
    std::size_t found = 0;
    const int n = 20000;
    double prev_x = -2, prev = det_shifted(prev_x);
    for (int k = 1; k <= n && found < 4; k++) {
        double x = -2 + 4.0 * k / n;
        double v = det_shifted(x);
        if ((prev < 0) != (v < 0)) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 80; it++) {
                double mid = 0.5 * (lo + hi);
                ((det_shifted(mid) < 0) == (prev < 0) ? lo : hi) = mid;
            }
            roots[found++] = 0.5 * (lo + hi);
        }
        prev_x = x;
        prev = v;
    }
    return roots;
}

TEST(PartialTranspose, ProductStateStaysPositive) {
    std::mt19937_64 rng(31);
    Mat2 a = testing::random_qubit_state(rng), b = testing::random_qubit_state(rng);
    auto rho = DensityMatrix::product(a, b);
    EXPECT_LT(distance(partial_transpose(rho, 2), kron(a, b.transpose())), 1e-15);
    EXPECT_LT(distance(partial_transpose(rho, 1), kron(a.transpose(), b)), 1e-15);
    EXPECT_GE(hermitian_eigensystem(partial_transpose(rho, 2)).eigenvalues[0], -1e-12);
}

TEST(PartialTranspose, BellSpectrum) {
    auto s = hermitian_eigensystem(partial_transpose(bell(), 2)).eigenvalues;
    EXPECT_NEAR(s[0], -0.5, 1e-14);
    for (std::size_t k = 1; k < 4; k++) {
        EXPECT_NEAR(s[k], 0.5, 1e-14);
    }
}

TEST(PartialTranspose, XiStateMinimum) {
    EXPECT_NEAR(hermitian_eigensystem(partial_transpose(xi_state(), 1)).eigenvalues[0], -0.5, 1e-14);
}

TEST(PartialTranspose, RejectsBadSubsystem) {
    EXPECT_THROW(partial_transpose(bell(), 0), Error);
    EXPECT_THROW(partial_transpose(bell(), 3), Error);
}

TEST(PartialTranspose, InvolutionHermiticityAndSubsystemInvariance) {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 500; k++) {
        auto rho = testing::random_state(rng);
        for (int s : {1, 2}) {
            auto pt = partial_transpose(rho, s);
            ASSERT_LT(distance(partial_transpose(pt, s), rho.matrix()), 1e-12);
            ASSERT_LT(distance(pt, pt.adjoint()), 1e-12);
            ASSERT_NEAR(pt.trace().real(), 1.0, 1e-12);
        }
        auto e1 = hermitian_eigensystem(partial_transpose(rho, 1)).eigenvalues;
        auto e2 = hermitian_eigensystem(partial_transpose(rho, 2)).eigenvalues;
        for (std::size_t j = 0; j < 4; j++) {
            ASSERT_NEAR(e1[j], e2[j], 1e-10);
        }
    }
}

TEST(PartialTranspose, SpectrumMatchesCharacteristicPolynomial) {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 20; k++) {
        auto rho = testing::random_state(rng);
        auto pt = partial_transpose(rho, 2);
        auto jacobi = hermitian_eigensystem(pt).eigenvalues;
        auto oracle = spectrum_by_bisection(pt);
        for (std::size_t j = 0; j < 4; j++) {
            EXPECT_NEAR(jacobi[j], oracle[j], 1e-9);
        }
    }
}

TEST(Verdict, Examples) {
    auto mixed = verdict(DensityMatrix::maximally_mixed());
    EXPECT_FALSE(mixed.entangled);
    EXPECT_FALSE(mixed.indeterminate);
    EXPECT_EQ(mixed.negativity, 0);
    auto b = verdict(bell());
    EXPECT_TRUE(b.entangled);
    EXPECT_NEAR(b.negativity, 0.5, 1e-14);
    EXPECT_NEAR(b.min_pt_eigenvalue, -0.5, 1e-14);
    EXPECT_THROW(verdict(bell(), 0), Error);
}

TEST(Verdict, IndeterminateBand) {
    // Werner state p|Bell><Bell| + (1-p) I/4 is entangled iff p > 1/3.
    auto werner = [](double p) {
        return DensityMatrix(bell().matrix() * Complex(p) + DensityMatrix::maximally_mixed().matrix() * Complex(1 - p));
    };
    auto at = verdict(werner(1.0 / 3));
    EXPECT_TRUE(at.indeterminate);
    EXPECT_FALSE(at.entangled);
    EXPECT_TRUE(verdict(werner(0.34)).entangled);
    auto below = verdict(werner(0.32));
    EXPECT_FALSE(below.entangled);
    EXPECT_FALSE(below.indeterminate);
    EXPECT_EQ(below.negativity, 0);
}

TEST(Verdict, RandomProductMixturesHaveNoNegativity) {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 200; k++) {
        Mat4 m;
        double total = 0;
        const int terms = 1 + k % 5;
        for (int t = 0; t < terms; t++) {
            const double w = u(rng);
            total += w;
            m += kron(testing::random_qubit_state(rng), testing::random_qubit_state(rng)) * Complex(w);
        }
        auto v = verdict(DensityMatrix::repaired(m * Complex(1 / total), 1e-9));
        EXPECT_FALSE(v.entangled);
        EXPECT_GE(v.min_pt_eigenvalue, -1e-9);
    }
}

TEST(Entropy, PureAndMixed) {
    EXPECT_NEAR(von_neumann_entropy(xi_state()), 0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed()), 2, 1e-12);
    EXPECT_NEAR(mixedness_fraction(DensityMatrix::basis(2)), 0, 1e-12);
    EXPECT_NEAR(mixedness_fraction(DensityMatrix::maximally_mixed()), 1, 1e-12);
}

TEST(Entropy, UnitaryInvarianceAndConcavity) {
    std::mt19937_64 rng(35);
    for (int k = 0; k < 200; k++) {
        auto a = testing::random_state(rng), b = testing::random_state(rng);
        EXPECT_NEAR(von_neumann_entropy(evolve(a, testing::random_unitary<4>(rng))), von_neumann_entropy(a), 1e-10);
        auto mix = DensityMatrix((a.matrix() + b.matrix()) * Complex(0.5));
        EXPECT_GE(von_neumann_entropy(mix), 0.5 * (von_neumann_entropy(a) + von_neumann_entropy(b)) - 1e-10);
    }
}

}  // namespace
}  // namespace entcap
