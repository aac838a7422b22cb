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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symspace/borndist.hpp"
#include "symspace/closedform.hpp"
#include "symspace/specialfns.hpp"
#include "symspace/symspaces.hpp"

namespace symspace {

struct McOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// One unit of Monte Carlo evidence.
struct McReport {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  double wall_time_s = 0.0;
};

/// Sample mean and standard error of i.i.d. draws of d_TV(P_V, uniform).
/// Trial i uses RngStream(seed, i). Needs at least 100 trials.
McReport mc_expected_tvd(const EnsembleSpec& spec, const McOptions& opts);

struct TwirlReport {
  ComplexMatrix mean;
  ComplexMatrix closed_form;
  double frobenius_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  double wall_time_s = 0.0;
};

/// Empirical E[V A V^dagger] compared against twirl_closed_form. AI, AII and
/// DIII only; needs at least 1000 trials.
TwirlReport mc_twirl(const EnsembleId& e, const ComplexMatrix& a, const McOptions& opts);

/// (G + G^dagger) / 2 for a complex Gaussian G; a generic Hermitian test operator.
ComplexMatrix random_hermitian(int d, RngStream& rng);

// ---------------------------------------------------------------------------
// Distribution laws of individual Born-distribution entries.

enum class EntryClass {
  GroupEntry,   // |V_00|^2 for U(d) or O(d)
  DotProduct,   // |a^T a|^2 for a Haar column a of U(d)
  AIDiagonal,   // |V_00|^2 for AI
  AIIGeneric,   // |V_10|^2 for AII
  AIIPartner,   // |V_0'0| for AII, identically zero
  DIIIGeneric,  // |V_10|^2 for DIII
  DIIIPartner,  // |V_0'0| for DIII, identically zero
};

struct DegenerateAtZero {};

using Law = std::variant<special::BetaParams, DegenerateAtZero>;

/// A (family, entry class) pair from the law catalog; construction fails with
/// DomainError for pairs outside the catalog.
class LawSpec {
 public:
  LawSpec(Ensemble family, EntryClass entry, int dim);

  Ensemble family() const noexcept { return family_; }
  EntryClass entry() const noexcept { return entry_; }
  int dim() const noexcept { return dim_; }

  Law law() const;
  std::string describe() const;

  /// Draws one variate of the entry from a fresh ensemble sample.
  double sample(RngStream& rng) const;

 private:
  Ensemble family_;
  EntryClass entry_;
  int dim_;
};

struct KsResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool degenerate = false;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
};

/// One-sample Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)|.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic rejection threshold sqrt(-ln(alpha / 2) / (2 n)).
double ks_threshold(std::uint64_t n, double alpha);

inline constexpr double kKsAlpha = 1e-3;
inline constexpr double kDegenerateTolerance = 1e-12;

/// KS test of the entry against its catalog law at significance alpha.
/// Degenerate laws are checked as max |sample| <= 1e-12 instead.
KsResult ks_law_check(const LawSpec& spec, const McOptions& opts, double alpha = kKsAlpha);

// ---------------------------------------------------------------------------
// Concentration.

/// Levy-type tail bound 2 exp(-(d - 2) t^2 / (c L^2)) with c = 24 for the
/// groups and c = 96 for the symmetric spaces.
double levy_bound(Ensemble family, double d, double t, double lipschitz = 1.0);

struct TailReport {
  double t = 0.0;
  double empirical = 0.0;
  double levy_bound = 0.0;
  double binomial_stderr = 0.0;
  double mean = 0.0;
  std::uint64_t trials = 0;
};

/// Fraction of samples with |d_TV - mean| >= t, centred at the empirical
/// mean, for every t in `ts` (one shared set of samples).
std::vector<TailReport> mc_tail_probability(const EnsembleSpec& spec, std::span<const double> ts,
                                            const McOptions& opts);

TailReport mc_tail_probability(const EnsembleSpec& spec, double t, const McOptions& opts);

/// Fraction of samples with d_TV(P_V, uniform) <= radius.
McReport mc_ball_fraction(const EnsembleSpec& spec, double radius, const McOptions& opts);

/// Fraction of samples with |<0|V^dagger Phi V|0> - mean(phi)| > tau.
McReport mc_query_deviation(const EnsembleSpec& spec, const DiagObservable& phi, double tau,
                            const McOptions& opts);

}  // namespace symspace
