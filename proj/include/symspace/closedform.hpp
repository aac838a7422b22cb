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

#include "symspace/matrixcore.hpp"
#include "symspace/symspaces.hpp"

namespace symspace {

/// An ensemble with exact Born-statistics formulas: U(d), O(d), Sp(d/2) and
/// the symmetric spaces AI, AII, DIII. The symplectic group shares every
/// formula with U(d).
class EnsembleId {
 public:
  EnsembleId(Ensemble family, int dim);

  Ensemble family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  EnsembleSpec spec() const { return EnsembleSpec(family_, dim_); }

 private:
  Ensemble family_;
  int dim_;
};

bool has_closed_form(Ensemble e) noexcept;

struct BoundInterval {
  double lower;
  double upper;

  bool contains(double v) const noexcept { return lower <= v && v <= upper; }
};

/// Entry classes of the Born distribution with distinct deviation laws.
/// Diagonal is the x = 0 entry of AI; Partner is the J-partner x = 0' of
/// AII and DIII; Generic is every remaining entry.
enum class EntrySlot { Diagonal, Partner, Generic };

/// Exact E d_TV(P_V, uniform).
double expected_tvd(const EnsembleId& e);

/// E |d P(x) - 1| for an entry of the given class.
double per_entry_deviation(const EnsembleId& e, EntrySlot slot);

/// lim_{d -> inf} expected_tvd: 1/e for U, Sp, AI, AII; sqrt(2/(pi e)) for
/// O and DIII.
double asymptote(Ensemble family);

/// Interval proven to contain expected_tvd: [1/e - 5/d, 1/e + 5/d] for AI and
/// AII, [sqrt(2/(pi e)) - 10/d, sqrt(2/(pi e)) + 5/d] for DIII. For the
/// groups the symmetric [xi0 - 5/d, xi0 + 5/d] is used as a convention only;
/// see interval_is_proven().
BoundInterval appendix_interval(const EnsembleId& e);

bool interval_is_proven(Ensemble family) noexcept;

/// Exact first-order twirl E[V A V^dagger]:
///   AI:        (tr[A] 1 + A^T) / (d + 1)
///   AII, DIII: (tr[A] 1 + J A^T J) / (d - 1)
ComplexMatrix twirl_closed_form(const EnsembleId& e, const ComplexMatrix& a);

/// Wendel's bounds on Gamma(x + s) / (x^s Gamma(x)) for x > 0, s in (0, 1).
BoundInterval wendel_bounds(double x, double s);

/// Gamma(x + s) / (x^s Gamma(x)) evaluated through ln_gamma.
double gamma_ratio(double x, double s);

}  // namespace symspace
