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

// Statistical-query lower bounds for learning the output distributions of
// AI, AII and DIII ensembles. Probabilities are carried as natural logs.

#include <span>
#include <vector>

#include "symspace/symspaces.hpp"

namespace symspace {

enum class SqMode {
  Combined,     // margin 10/d and tau_min = 2/(d-1) for every family
  PerEnsemble,  // AI: 5/d, 2/(d+1); AII: 5/d, 2/(d-1); DIII: 10/d, 2/(d-1)
};

struct SqParams {
  Ensemble family = Ensemble::AI;
  double dim = 0.0;  // may exceed the int range, e.g. 2^40
  double tau = 0.0;
  double eps = 0.0;
  double log_beta = 0.0;  // log of the success fraction, in (-inf, 0]
  SqMode mode = SqMode::PerEnsemble;
};

/// Checks family, dimension, tau > 0, eps >= 0 and 0 < beta <= 1.
void validate(const SqParams& p);

/// Limit of the expected distance to uniform: 1/e for AI and AII,
/// sqrt(2 / (pi e)) for DIII.
double xi0(Ensemble family);

/// c in xi = xi0 - c/d - eps - tau.
double margin_constant(Ensemble family, SqMode mode);

double tau_min(Ensemble family, double dim, SqMode mode);

/// xi0 - c/d - eps - tau; DomainError if not positive.
double xi_of(const SqParams& p);

/// log of 2 exp(-(d - 2) xi^2 / 96).
double log_u_ball_bound(const SqParams& p);
double u_ball_bound(const SqParams& p);

/// log of 2 exp(-(d - 2) (tau - tau_min)^2 / 384); DomainError if tau <= tau_min.
double log_f_bound(const SqParams& p);
double f_bound(const SqParams& p);

struct BoundResult {
  double log_q_plus_1 = 0.0;  // max(0, log_ratio)
  double log_ratio = 0.0;     // log(beta - u) - log f, -inf when beta <= u
  double u_bound = 0.0;
  double f_bound = 0.0;
  double log_u = 0.0;
  double log_f = 0.0;
  double xi = 0.0;
  bool vacuous = false;  // true when the bound only gives q >= 0
  bool xi_positive = true;
};

/// log(q + 1) >= log(beta - u) - log f.
BoundResult lower_bound_q(const SqParams& p);

/// As lower_bound_q, but xi <= 0 yields a vacuous result with u = 2 (the
/// xi -> 0+ value of the concentration bound) instead of an error. Invalid
/// tau, eps or beta still throw.
BoundResult evaluate_bound(const SqParams& p);

struct RegimeSchedule {
  double tau_exp = 0.25;   // tau = 2^{-tau_exp n}
  double beta_exp = 0.49;  // beta = exp(-2^{beta_exp n})
  double xi_exp = 0.25;    // xi = 2^{-xi_exp n}
  SqMode mode = SqMode::Combined;
};

struct RegimeRow {
  int n = 0;
  double dim = 0.0;
  double tau = 0.0;
  double eps = 0.0;
  double xi = 0.0;
  double log_beta = 0.0;
  double log_u = 0.0;
  double log_f = 0.0;
  double log_q_plus_1 = 0.0;
  double log_log_q_plus_1 = 0.0;  // -inf when vacuous
  bool vacuous = true;
  bool valid = false;  // false when the schedule yields invalid parameters
};

/// One row per n with d = 2^n and eps = xi0 - c/d - tau - xi. The bound terms
/// are evaluated from the scheduled xi directly. Invalid rows are reported as
/// vacuous instead of throwing.
std::vector<RegimeRow> regime_table(Ensemble family, std::span<const int> n_list,
                                    const RegimeSchedule& schedule = {});

}  // namespace symspace
