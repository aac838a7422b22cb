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

#include "symspace/matrixcore.hpp"

#include <cmath>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

// Entries are drawn in row-major order, real part before imaginary part.
ComplexMatrix gaussian_complex_matrix(int d, RngStream& rng) {
  const double scale = std::sqrt(0.5);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = rng.normal() * scale;
      const double im = rng.normal() * scale;
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Eigen::MatrixXd gaussian_real_matrix(int d, RngStream& rng) {
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
  }
  return g;
}

}  // namespace

GroupSpec::GroupSpec(GroupFamily family, int dim) : family_(family), dim_(dim) {
  if (dim < kMinDim) {
    throw DomainError("group dimension must be at least 4, got " + std::to_string(dim));
  }
}

double unitarity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
}

bool is_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!m.allFinite()) return false;
  return unitarity_defect(m) <= 1e-10 * static_cast<double>(m.rows());
}

ComplexVector sample_gaussian_vector(int d, Field field, RngStream& rng) {
  if (d < 1) throw DomainError("vector dimension must be positive");
  ComplexVector g(d);
  if (field == Field::Real) {
    for (int i = 0; i < d; ++i) g(i) = Complex(rng.normal(), 0.0);
  } else {
    const double scale = std::sqrt(0.5);
    for (int i = 0; i < d; ++i) {
      const double re = rng.normal() * scale;
      const double im = rng.normal() * scale;
      g(i) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix sample_haar(const GroupSpec& spec, RngStream& rng) {
  const int d = spec.dim();
  if (spec.family() == GroupFamily::Orthogonal) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_real_matrix(d, rng));
    Eigen::MatrixXd q = qr.householderQ();
    for (int j = 0; j < d; ++j) {
      if (qr.matrixQR()(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q.cast<Complex>();
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_complex_matrix(d, rng));
  ComplexMatrix q = qr.householderQ();
  for (int j = 0; j < d; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    // |r| = 0 has probability zero; leave the column untouched if it happens.
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

std::pair<ComplexVector, ComplexVector> sample_two_columns(int d, Field field,
                                                           RngStream& rng) {
  if (d < 2) throw DomainError("two orthonormal columns need d >= 2");
  for (;;) {
    const ComplexVector g1 = sample_gaussian_vector(d, field, rng);
    const ComplexVector g2 = sample_gaussian_vector(d, field, rng);
    const double n1 = g1.norm();
    if (n1 < 1e-300) continue;
    const ComplexVector a = g1 / n1;
    const ComplexVector h2 = g2 - a.dot(g2) * a;
    const double n2 = h2.norm();
    if (n2 < 1e-300) continue;
    ComplexVector b = h2 / n2;
    // second pass restores orthogonality to rounding level
    b -= a.dot(b) * a;
    b /= b.norm();
    return {a, b};
  }
}

}  // namespace symspace
