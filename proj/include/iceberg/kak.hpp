// Copyright 2024 the iceberg-qed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace iceberg {

/// Two-qubit canonical decomposition
///   u == phase * (hi_post (x) lo_post)
///              * exp(-i (xx XX + yy YY + zz ZZ) / 2)
///              * (hi_pre (x) lo_pre)
/// where (x) is the Kronecker product, the "hi" factor acts on the qubit
/// carried by index bit 1 and "lo" on index bit 0. The interaction angles
/// are reported canonically with |xx| <= yy <= zz in (-pi/2, pi/2].
struct KakDecomposition {
  Eigen::Matrix2cd hi_post, lo_post;
  Eigen::Matrix2cd hi_pre, lo_pre;
  double xx = 0.0, yy = 0.0, zz = 0.0;
  std::complex<double> phase{1.0, 0.0};
};

KakDecomposition kak_decompose(const Eigen::Matrix4cd& u);

Eigen::Matrix4cd kak_recompose(const KakDecomposition& d);

/// exp(-i (xx XX + yy YY + zz ZZ) / 2), the canonical interaction unitary.
Eigen::Matrix4cd canonical_interaction(double xx, double yy, double zz);

/// Factors a 4x4 matrix into phase * (hi (x) lo) with unit-determinant
/// factors; throws when the input is not a tensor product.
void factor_tensor_product(const Eigen::Matrix4cd& m, Eigen::Matrix2cd* hi,
                           Eigen::Matrix2cd* lo, std::complex<double>* phase);

}  // namespace iceberg
