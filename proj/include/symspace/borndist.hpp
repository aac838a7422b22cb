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

#include <span>
#include <vector>

#include "symspace/matrixcore.hpp"

namespace symspace {

/// Born distribution P(x) = |<x|V|ref>|^2 over the computational basis.
class BornDist {
 public:
  /// Validates entries in [0, 1] (up to 1e-12 rounding) summing to 1 within 1e-10.
  explicit BornDist(std::vector<double> probs);

  /// Born distribution of a unit vector; rejects vectors whose norm
  /// deviates from 1 by more than 1e-10.
  static BornDist from_state(const ComplexVector& state);

  std::span<const double> probs() const noexcept { return probs_; }
  int dim() const noexcept { return static_cast<int>(probs_.size()); }
  double operator[](int x) const { return probs_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<double> probs_;
};

/// A diagonal observable Phi = sum_x phi(x) |x><x| with |phi(x)| <= 1.
class DiagObservable {
 public:
  explicit DiagObservable(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  int dim() const noexcept { return static_cast<int>(values_.size()); }
  double mean() const;

 private:
  std::vector<double> values_;
};

/// Born distribution of column `ref_index` of a unitary V. Throws
/// InvariantError if V is not unitary.
BornDist born_distribution(const ComplexMatrix& v, int ref_index = 0);

/// Total variation distance to the constant distribution 1/d.
double tvd_to_uniform(const BornDist& p);

/// <0|V^dagger Phi V|0> = sum_x phi(x) |<x|V|0>|^2.
double sq_value(const ComplexMatrix& v, const DiagObservable& phi);

}  // namespace symspace
