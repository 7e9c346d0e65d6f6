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

#ifndef ENTCAP_ENTANGLE_HPP
#define ENTCAP_ENTANGLE_HPP

#include "entcap/smallmat.hpp"

namespace entcap {

/// Outcome of the partial-transpose test. For two qubits a negative partial
/// transpose is equivalent to entanglement.
struct EntanglementVerdict {
    double min_pt_eigenvalue = 0;
    /// Sum of |negative eigenvalues| of the partial transpose.
    double negativity = 0;
    /// min_pt_eigenvalue < -tolerance.
    bool entangled = false;
    double tolerance = 1e-9;
    /// |min_pt_eigenvalue| <= tolerance: too close to the boundary to call.
    bool indeterminate = false;
};

/// Transposes the indices of qubit 1 or 2.
Mat4 partial_transpose(const Mat4 &rho, int subsystem);
Mat4 partial_transpose(const DensityMatrix &rho, int subsystem);

EntanglementVerdict verdict(const DensityMatrix &rho, double tolerance = 1e-9);

/// -Tr(rho log2 rho) in bits, in [0, 2].
double von_neumann_entropy(const DensityMatrix &rho);

/// Entropy divided by its two-qubit maximum of 2 bits.
double mixedness_fraction(const DensityMatrix &rho);

}  // namespace entcap

#endif
