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

#include "symspace/borndist.hpp"

#include <cmath>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kSumTolerance = 1e-10;
constexpr double kEntrySlack = 1e-12;

double neumaier_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (const double x : xs) {
    const double t = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + carry;
}

}  // namespace

BornDist::BornDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvariantError("Born distribution must be non-empty");
  for (const double p : probs_) {
    if (!std::isfinite(p) || p < -kEntrySlack || p > 1.0 + kEntrySlack) {
      throw InvariantError("Born probability outside [0, 1]: " + std::to_string(p));
    }
  }
  const double total = neumaier_sum(probs_);
  if (std::fabs(total - 1.0) > kSumTolerance) {
    throw InvariantError("Born probabilities sum to " + std::to_string(total));
  }
}

BornDist BornDist::from_state(const ComplexVector& state) {
  std::vector<double> probs(static_cast<std::size_t>(state.size()));
  for (Eigen::Index x = 0; x < state.size(); ++x) probs[static_cast<std::size_t>(x)] = std::norm(state(x));
  return BornDist(std::move(probs));
}

DiagObservable::DiagObservable(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvariantError("observable must be non-empty");
  for (const double v : values_) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw InvariantError("observable value outside [-1, 1]: " + std::to_string(v));
    }
  }
}

double DiagObservable::mean() const {
  return neumaier_sum(values_) / static_cast<double>(values_.size());
}

BornDist born_distribution(const ComplexMatrix& v, int ref_index) {
  if (v.rows() != v.cols()) throw DomainError("matrix is not square");
  if (ref_index < 0 || ref_index >= v.cols()) {
    throw DomainError("reference index " + std::to_string(ref_index) + " out of range");
  }
  if (!is_unitary(v)) {
    throw InvariantError("Born distribution requires a unitary matrix (defect " +
                         std::to_string(unitarity_defect(v)) + ")");
  }
  return BornDist::from_state(v.col(ref_index));
}

double tvd_to_uniform(const BornDist& p) {
  const double inv_d = 1.0 / p.dim();
  double sum = 0.0;
  double carry = 0.0;
  for (const double q : p.probs()) {
    const double x = std::fabs(q - inv_d);
    const double t = sum + x;
    carry += sum >= x ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return 0.5 * (sum + carry);
}

double sq_value(const ComplexMatrix& v, const DiagObservable& phi) {
  if (v.rows() != phi.dim() || v.cols() != phi.dim()) {
    throw DomainError("observable dimension does not match the matrix");
  }
  const BornDist p = born_distribution(v);
  double acc = 0.0;
  for (int x = 0; x < p.dim(); ++x) acc += phi.values()[static_cast<std::size_t>(x)] * p[x];
  return acc;
}

}  // namespace symspace
