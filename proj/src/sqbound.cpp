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

#include "symspace/sqbound.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool supported(Ensemble f) {
  return f == Ensemble::AI || f == Ensemble::AII || f == Ensemble::DIII;
}

double log_u_of_xi(double d, double xi) { return std::numbers::ln2 - (d - 2.0) * xi * xi / 96.0; }

double log_f_of_gap(double d, double gap) {
  if (!(gap > 0.0)) throw DomainError("sq bounds: tau must exceed tau_min");
  return std::numbers::ln2 - (d - 2.0) * gap * gap / 384.0;
}

BoundResult combine(double log_beta, double xi, double log_u, double log_f) {
  BoundResult r;
  r.xi = xi;
  r.log_u = log_u;
  r.log_f = log_f;
  r.u_bound = std::exp(log_u);
  r.f_bound = std::exp(log_f);
  if (log_beta > log_u) {
    r.log_ratio = log_beta + std::log1p(-std::exp(log_u - log_beta)) - log_f;
  } else {
    r.log_ratio = -kInf;
  }
  r.vacuous = !(r.log_ratio > 0.0);
  r.log_q_plus_1 = r.vacuous ? 0.0 : r.log_ratio;
  return r;
}

}  // namespace

void validate(const SqParams& p) {
  if (!supported(p.family)) {
    throw DomainError("sq bounds are defined for ai, aii and diii only");
  }
  if (!(p.dim >= 4.0) || !std::isfinite(p.dim) || p.dim != std::floor(p.dim)) {
    throw DomainError("sq bounds: dimension must be an integer >= 4");
  }
  if (p.family != Ensemble::AI && p.dim < 9007199254740992.0 && std::fmod(p.dim, 2.0) != 0.0) {
    throw DomainError("sq bounds: dimension must be even for aii and diii");
  }
  if (!(p.tau > 0.0)) throw DomainError("sq bounds: tau must be positive");
  if (!(p.eps >= 0.0)) throw DomainError("sq bounds: eps must be non-negative");
  if (!(p.log_beta <= 0.0) || p.log_beta == -kInf) {
    throw DomainError("sq bounds: beta must lie in (0, 1]");
  }
}

double xi0(Ensemble family) {
  switch (family) {
    case Ensemble::AI:
    case Ensemble::AII:
      return std::exp(-1.0);
    case Ensemble::DIII:
      return std::sqrt(2.0 / (std::numbers::pi * std::numbers::e));
    default:
      throw DomainError("sq bounds are defined for ai, aii and diii only");
  }
}

double margin_constant(Ensemble family, SqMode mode) {
  if (!supported(family)) throw DomainError("sq bounds are defined for ai, aii and diii only");
  if (mode == SqMode::Combined || family == Ensemble::DIII) return 10.0;
  return 5.0;
}

double tau_min(Ensemble family, double dim, SqMode mode) {
  if (!supported(family)) throw DomainError("sq bounds are defined for ai, aii and diii only");
  if (mode == SqMode::PerEnsemble && family == Ensemble::AI) return 2.0 / (dim + 1.0);
  return 2.0 / (dim - 1.0);
}

double xi_of(const SqParams& p) {
  validate(p);
  const double xi = xi0(p.family) - margin_constant(p.family, p.mode) / p.dim - p.eps - p.tau;
  if (!(xi > 0.0)) throw DomainError("sq bounds: xi = xi0 - c/d - eps - tau must be positive");
  return xi;
}

double log_u_ball_bound(const SqParams& p) { return log_u_of_xi(p.dim, xi_of(p)); }

double u_ball_bound(const SqParams& p) { return std::exp(log_u_ball_bound(p)); }

double log_f_bound(const SqParams& p) {
  validate(p);
  return log_f_of_gap(p.dim, p.tau - tau_min(p.family, p.dim, p.mode));
}

double f_bound(const SqParams& p) { return std::exp(log_f_bound(p)); }

BoundResult lower_bound_q(const SqParams& p) {
  const double xi = xi_of(p);
  return combine(p.log_beta, xi, log_u_of_xi(p.dim, xi), log_f_bound(p));
}

BoundResult evaluate_bound(const SqParams& p) {
  validate(p);
  const double log_f = log_f_bound(p);
  const double xi = xi0(p.family) - margin_constant(p.family, p.mode) / p.dim - p.eps - p.tau;
  if (xi > 0.0) return combine(p.log_beta, xi, log_u_of_xi(p.dim, xi), log_f);
  BoundResult r = combine(p.log_beta, xi, std::numbers::ln2, log_f);
  r.xi_positive = false;
  return r;
}

std::vector<RegimeRow> regime_table(Ensemble family, std::span<const int> n_list,
                                    const RegimeSchedule& schedule) {
  std::vector<RegimeRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    RegimeRow row;
    row.n = n;
    row.dim = std::ldexp(1.0, n);
    row.tau = std::exp2(-schedule.tau_exp * n);
    row.xi = std::exp2(-schedule.xi_exp * n);
    row.log_beta = -std::exp2(schedule.beta_exp * n);
    row.log_log_q_plus_1 = -kInf;
    try {
      const double c = margin_constant(family, schedule.mode);
      row.eps = xi0(family) - c / row.dim - row.tau - row.xi;
      const SqParams p{family, row.dim, row.tau, row.eps, row.log_beta, schedule.mode};
      const BoundResult b = combine(row.log_beta, row.xi, log_u_of_xi(row.dim, row.xi),
                                    log_f_bound(p));
      row.log_u = b.log_u;
      row.log_f = b.log_f;
      row.log_q_plus_1 = b.log_q_plus_1;
      row.vacuous = b.vacuous;
      row.valid = std::isfinite(row.dim) && row.xi > 0.0;
      if (!b.vacuous) row.log_log_q_plus_1 = std::log(b.log_q_plus_1);
    } catch (const DomainError&) {
      row.valid = false;
      row.vacuous = true;
    }
    if (!row.valid) {
      row.vacuous = true;
      row.log_q_plus_1 = 0.0;
      row.log_log_q_plus_1 = -kInf;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace symspace
