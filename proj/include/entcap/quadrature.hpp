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

#ifndef ENTCAP_QUADRATURE_HPP
#define ENTCAP_QUADRATURE_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace entcap {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
///
/// Rules are computed once per node count (Golub-Welsch on the Jacobi matrix)
/// and shared; the returned pointer is never null.
std::shared_ptr<const QuadratureRule> gauss_hermite(std::size_t n);

/// Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
std::shared_ptr<const QuadratureRule> gauss_laguerre(std::size_t n);

}  // namespace entcap

#endif
