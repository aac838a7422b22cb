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

#include "symspace/closedform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symspace/error.hpp"
#include "symspace/specialfns.hpp"

namespace symspace {

namespace {

using special::ln_beta;
using special::ln_gamma;

const double kInvE = std::exp(-1.0);
const double kOrthogonalLimit = std::sqrt(2.0 / (std::numbers::pi * std::numbers::e));

// (1 - 1/d)^p
double shrink_pow(double d, double p) { return std::pow(1.0 - 1.0 / d, p); }

double unitary_tvd(double d) { return shrink_pow(d, d); }

double orthogonal_tvd(double d) {
  const double log_front = std::log(2.0) + ln_gamma(d / 2.0) -
                           0.5 * std::log(std::numbers::pi * d) - ln_gamma((d - 1.0) / 2.0);
  return std::exp(log_front + (d - 1.0) / 2.0 * std::log1p(-1.0 / d));
}

// (d-1)^d / d^{(d+1)/2} * 2F1(d, (d-1)/2; d+1; -(d-1)), with the hypergeometric
// factor taken through Pfaff's transformation so that nothing overflows.
double ai_hypergeometric_term(double d) {
  const auto f = special::hyp2f1_scaled({d, (d - 1.0) / 2.0, d + 1.0, -(d - 1.0)});
  const double log_front = d * std::log(d - 1.0) - (d + 1.0) / 2.0 * std::log(d);
  return f.mantissa * std::exp(log_front + f.log_scale);
}

double ai_diagonal(double d) {
  return 4.0 * (d - 1.0) / (d + 1.0) * shrink_pow(d, (d - 1.0) / 2.0) - (d - 1.0) / (d + 1.0);
}

double ai_generic(double d) { return 1.0 / (d + 1.0) + ai_hypergeometric_term(d); }

double aii_generic(double d) { return 2.0 * shrink_pow(d, d - 2.0) - 1.0 / (d - 1.0); }

// 2 / sqrt(d) (1 - 1/d)^{(d-2)/2} + B_{1-1/d}((d-2)/2, 3/2)
double diii_bracket(double d) {
  return 2.0 / std::sqrt(d) * shrink_pow(d, (d - 2.0) / 2.0) +
         special::inc_beta(1.0 - 1.0 / d, (d - 2.0) / 2.0, 1.5);
}

double diii_generic(double d) {
  return -1.0 / (d - 1.0) + 2.0 * std::exp(-ln_beta((d - 2.0) / 2.0, 0.5)) * diii_bracket(d);
}

double diii_tvd(double d) {
  return (d - 1.0) / d * std::exp(-ln_beta((d - 2.0) / 2.0, 0.5)) * diii_bracket(d);
}

double ai_tvd(double d) {
  return (4.0 * (d - 1.0) / (d + 1.0) * shrink_pow(d, (d - 1.0) / 2.0) +
          (d - 1.0) * ai_hypergeometric_term(d)) /
         (2.0 * d);
}

[[noreturn]] void bad_slot(const EnsembleId& e, const char* slot) {
  throw DomainError(std::string(slot) + " entries are not defined for " +
                    std::string(to_string(e.family())));
}

}  // namespace

bool has_closed_form(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Unitary:
    case Ensemble::Orthogonal:
    case Ensemble::Symplectic:
    case Ensemble::AI:
    case Ensemble::AII:
    case Ensemble::DIII:
      return true;
    default:
      return false;
  }
}

EnsembleId::EnsembleId(Ensemble family, int dim) : family_(family), dim_(dim) {
  if (!has_closed_form(family)) {
    throw DomainError("no closed-form Born statistics for " + std::string(to_string(family)));
  }
  EnsembleSpec(family, dim);  // validates d >= 4 and parity
}

double expected_tvd(const EnsembleId& e) {
  const double d = e.dim();
  switch (e.family()) {
    case Ensemble::Unitary:
    case Ensemble::Symplectic:
      return unitary_tvd(d);
    case Ensemble::Orthogonal:
      return orthogonal_tvd(d);
    case Ensemble::AI:
      return ai_tvd(d);
    case Ensemble::AII:
      return shrink_pow(d, d - 1.0);
    case Ensemble::DIII:
      return diii_tvd(d);
    default:
      break;
  }
  throw DomainError("unsupported ensemble");
}

double per_entry_deviation(const EnsembleId& e, EntrySlot slot) {
  const double d = e.dim();
  const Ensemble f = e.family();
  if (slot == EntrySlot::Diagonal) {
    if (f != Ensemble::AI) bad_slot(e, "diagonal");
    return ai_diagonal(d);
  }
  if (slot == EntrySlot::Partner) {
    if (f != Ensemble::AII && f != Ensemble::DIII) bad_slot(e, "partner");
    return 1.0;
  }
  switch (f) {
    case Ensemble::Unitary:
    case Ensemble::Symplectic:
    case Ensemble::Orthogonal:
      // every entry has the same law, so the mean deviation is 2 E d_TV
      return 2.0 * expected_tvd(e);
    case Ensemble::AI:
      return ai_generic(d);
    case Ensemble::AII:
      return aii_generic(d);
    case Ensemble::DIII:
      return diii_generic(d);
    default:
      break;
  }
  throw DomainError("unsupported ensemble");
}

double asymptote(Ensemble family) {
  switch (family) {
    case Ensemble::Unitary:
    case Ensemble::Symplectic:
    case Ensemble::AI:
    case Ensemble::AII:
      return kInvE;
    case Ensemble::Orthogonal:
    case Ensemble::DIII:
      return kOrthogonalLimit;
    default:
      break;
  }
  throw DomainError("no known asymptote for " + std::string(to_string(family)));
}

bool interval_is_proven(Ensemble family) noexcept {
  return family == Ensemble::AI || family == Ensemble::AII || family == Ensemble::DIII;
}

BoundInterval appendix_interval(const EnsembleId& e) {
  const double d = e.dim();
  const double xi0 = asymptote(e.family());
  if (e.family() == Ensemble::DIII) return {xi0 - 10.0 / d, xi0 + 5.0 / d};
  return {xi0 - 5.0 / d, xi0 + 5.0 / d};
}

ComplexMatrix twirl_closed_form(const EnsembleId& e, const ComplexMatrix& a) {
  const int d = e.dim();
  if (a.rows() != d || a.cols() != d) {
    throw DomainError("operator dimension does not match the ensemble");
  }
  const Complex trace = a.trace();
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  switch (e.family()) {
    case Ensemble::AI:
      return (trace * identity + a.transpose()) / static_cast<double>(d + 1);
    case Ensemble::AII:
    case Ensemble::DIII: {
      const ComplexMatrix j = build_j(d);
      return (trace * identity + j * a.transpose() * j) / static_cast<double>(d - 1);
    }
    default:
      break;
  }
  throw DomainError("no twirl closed form for " + std::string(to_string(e.family())));
}

BoundInterval wendel_bounds(double x, double s) {
  if (!(x > 0.0) || !(s > 0.0 && s < 1.0)) {
    throw DomainError("Wendel's inequality needs x > 0 and 0 < s < 1");
  }
  return {std::pow(x / (x + s), 1.0 - s), 1.0};
}

double gamma_ratio(double x, double s) {
  if (!(x > 0.0) || !(x + s > 0.0)) throw DomainError("gamma ratio needs x > 0, x + s > 0");
  return std::exp(ln_gamma(x + s) - ln_gamma(x) - s * std::log(x));
}

}  // namespace symspace
