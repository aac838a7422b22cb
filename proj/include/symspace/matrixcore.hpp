// Copyright 2026 The symspace Authors.
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

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "symspace/rng.hpp"

namespace symspace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class Field { Real, Complex };

enum class GroupFamily { Unitary, Orthogonal };

/// A classical compact group of d x d matrices, d >= 4.
class GroupSpec {
 public:
  GroupSpec(GroupFamily family, int dim);

  GroupFamily family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  Field field() const noexcept {
    return family_ == GroupFamily::Orthogonal ? Field::Real : Field::Complex;
  }

 private:
  GroupFamily family_;
  int dim_;
};

/// Smallest Hilbert-space dimension accepted anywhere in the library.
inline constexpr int kMinDim = 4;

/// ||M^dagger M - 1||_F.
double unitarity_defect(const ComplexMatrix& m);

/// True when ||M^dagger M - 1||_F <= 1e-10 * d.
bool is_unitary(const ComplexMatrix& m);

/// Vector of i.i.d. standard normals. Complex entries have independent real
/// and imaginary parts of variance 1/2 each, so E|g_j|^2 = 1 in both fields.
ComplexVector sample_gaussian_vector(int d, Field field, RngStream& rng);

/// Haar-random element of U(d) or O(d).
///
/// QR decomposition of a Gaussian matrix followed by normalisation of R's
/// diagonal to unit modulus (phase for U(d), sign for O(d)); the orthogonal
/// case is computed in real arithmetic and has exactly zero imaginary part.
ComplexMatrix sample_haar(const GroupSpec& spec, RngStream& rng);

/// Two orthonormal vectors distributed as two columns of a Haar matrix,
/// produced by Gram-Schmidt on a pair of Gaussian vectors.
std::pair<ComplexVector, ComplexVector> sample_two_columns(int d, Field field,
                                                           RngStream& rng);

}  // namespace symspace
