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

#include "symspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "symspace/error.hpp"

namespace symspace {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_trials(std::uint64_t trials, std::uint64_t minimum, const char* what) {
  if (trials < minimum) {
    std::ostringstream msg;
    msg << what << ": at least " << minimum << " trials are required, got " << trials;
    throw DomainError(msg.str());
  }
}

struct MeanStd {
  double mean;
  double std_error;
};

MeanStd mean_and_stderr(const std::vector<double>& xs) {
  const auto n = static_cast<double>(xs.size());
  detail::CompensatedSum s;
  for (double x : xs) s.add(x);
  const double mean = s.value() / n;
  detail::CompensatedSum ss;
  for (double x : xs) ss.add((x - mean) * (x - mean));
  const double var = xs.size() > 1 ? ss.value() / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double binomial_stderr(double p, std::uint64_t n) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

double state_tvd(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t i) {
  RngStream rng(seed, i);
  return tvd_to_uniform(BornDist::from_state(sample_state(spec, rng)));
}

}  // namespace

McReport mc_expected_tvd(const EnsembleSpec& spec, const McOptions& opts) {
  require_trials(opts.trials, 100, "mc_expected_tvd");
  const auto start = Clock::now();
  const auto values = detail::collect_trials(
      opts.trials, opts.workers, [&](std::uint64_t i) { return state_tvd(spec, opts.seed, i); });
  const auto ms = mean_and_stderr(values);
  return {ms.mean, ms.std_error, opts.trials, opts.seed, seconds_since(start)};
}

TwirlReport mc_twirl(const EnsembleId& e, const ComplexMatrix& a, const McOptions& opts) {
  require_trials(opts.trials, 1000, "mc_twirl");
  const int d = e.dim();
  if (a.rows() != d || a.cols() != d) {
    throw DomainError("mc_twirl: operator dimension does not match the ensemble");
  }
  TwirlReport report;
  report.closed_form = twirl_closed_form(e, a);
  const auto start = Clock::now();
  const EnsembleSpec spec = e.spec();
  std::vector<ComplexMatrix> chunk_sums(detail::chunk_count(opts.trials));
  detail::for_each_chunk(opts.trials, opts.workers,
                         [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                           ComplexMatrix acc = ComplexMatrix::Zero(d, d);
                           for (std::uint64_t i = begin; i < end; ++i) {
                             RngStream rng(opts.seed, i);
                             const ComplexMatrix v = sample_ensemble(spec, rng);
                             acc.noalias() += v * a * v.adjoint();
                           }
                           chunk_sums[c] = std::move(acc);
                         });
  report.mean = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    for (int col = 0; col < d; ++col) {
      detail::CompensatedSum re;
      detail::CompensatedSum im;
      for (const auto& m : chunk_sums) {
        re.add(m(r, col).real());
        im.add(m(r, col).imag());
      }
      report.mean(r, col) = Complex(re.value(), im.value()) / static_cast<double>(opts.trials);
    }
  }
  report.frobenius_error = (report.mean - report.closed_form).norm();
  report.trials = opts.trials;
  report.master_seed = opts.seed;
  report.wall_time_s = seconds_since(start);
  return report;
}

ComplexMatrix random_hermitian(int d, RngStream& rng) {
  if (d < 1) throw DomainError("random_hermitian: dimension must be positive");
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im);
    }
  }
  return (g + g.adjoint()) / 2.0;
}

// ---------------------------------------------------------------------------

LawSpec::LawSpec(Ensemble family, EntryClass entry, int dim)
    : family_(family), entry_(entry), dim_(dim) {
  bool ok = false;
  switch (entry) {
    case EntryClass::GroupEntry:
      ok = family == Ensemble::Unitary || family == Ensemble::Orthogonal;
      break;
    case EntryClass::DotProduct:
      ok = family == Ensemble::Unitary;
      break;
    case EntryClass::AIDiagonal:
      ok = family == Ensemble::AI;
      break;
    case EntryClass::AIIGeneric:
    case EntryClass::AIIPartner:
      ok = family == Ensemble::AII;
      break;
    case EntryClass::DIIIGeneric:
    case EntryClass::DIIIPartner:
      ok = family == Ensemble::DIII;
      break;
  }
  if (!ok) {
    throw DomainError("LawSpec: entry class is not catalogued for family " +
                      std::string(to_string(family)));
  }
  EnsembleSpec check(family, dim);
  (void)check;
}

Law LawSpec::law() const {
  const double d = dim_;
  switch (entry_) {
    case EntryClass::GroupEntry:
      return family_ == Ensemble::Unitary ? special::BetaParams(1.0, d - 1.0)
                                          : special::BetaParams(0.5, (d - 1.0) / 2.0);
    case EntryClass::DotProduct:
    case EntryClass::AIDiagonal:
      return special::BetaParams(1.0, (d - 1.0) / 2.0);
    case EntryClass::AIIGeneric:
      return special::BetaParams(1.0, d - 2.0);
    case EntryClass::DIIIGeneric:
      return special::BetaParams(0.5, (d - 2.0) / 2.0);
    case EntryClass::AIIPartner:
    case EntryClass::DIIIPartner:
      return DegenerateAtZero{};
  }
  throw DomainError("LawSpec: unknown entry class");
}

std::string LawSpec::describe() const {
  std::ostringstream out;
  const Law l = law();
  if (const auto* b = std::get_if<special::BetaParams>(&l)) {
    out << "Beta(" << b->a << ", " << b->b << ")";
  } else {
    out << "delta_0";
  }
  return out.str();
}

double LawSpec::sample(RngStream& rng) const {
  const EnsembleSpec spec(family_, dim_);
  const ComplexVector s = sample_state(spec, rng);
  switch (entry_) {
    case EntryClass::GroupEntry:
    case EntryClass::AIDiagonal:
      return std::norm(s(0));
    case EntryClass::DotProduct:
      return std::norm(s.cwiseProduct(s).sum());
    case EntryClass::AIIGeneric:
    case EntryClass::DIIIGeneric:
      return std::norm(s(1));
    case EntryClass::AIIPartner:
    case EntryClass::DIIIPartner:
      return std::abs(s(partner_index(0, dim_).index));
  }
  throw DomainError("LawSpec: unknown entry class");
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_threshold(std::uint64_t n, double alpha) {
  if (n == 0) throw DomainError("ks_threshold: n must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("ks_threshold: alpha must lie in (0, 1)");
  return std::sqrt(-std::log(alpha / 2.0) / (2.0 * static_cast<double>(n)));
}

KsResult ks_law_check(const LawSpec& spec, const McOptions& opts, double alpha) {
  require_trials(opts.trials, 1000, "ks_law_check");
  auto values = detail::collect_trials(opts.trials, opts.workers, [&](std::uint64_t i) {
    RngStream rng(opts.seed, i);
    return spec.sample(rng);
  });
  KsResult r;
  r.trials = opts.trials;
  r.master_seed = opts.seed;
  const Law law = spec.law();
  if (const auto* b = std::get_if<special::BetaParams>(&law)) {
    const special::BetaParams p = *b;
    r.statistic = ks_statistic(std::move(values), [&](double x) {
      return special::beta_cdf(std::clamp(x, 0.0, 1.0), p);
    });
    r.threshold = ks_threshold(opts.trials, alpha);
  } else {
    r.degenerate = true;
    for (double v : values) r.statistic = std::max(r.statistic, std::abs(v));
    r.threshold = kDegenerateTolerance;
  }
  r.pass = r.statistic <= r.threshold;
  return r;
}

// ---------------------------------------------------------------------------

double levy_bound(Ensemble family, double d, double t, double lipschitz) {
  if (!(lipschitz > 0.0)) throw DomainError("levy_bound: Lipschitz constant must be positive");
  if (t < 0.0) throw DomainError("levy_bound: t must be non-negative");
  const double c = is_group(family) ? 24.0 : 96.0;
  return 2.0 * std::exp(-(d - 2.0) * t * t / (c * lipschitz * lipschitz));
}

std::vector<TailReport> mc_tail_probability(const EnsembleSpec& spec, std::span<const double> ts,
                                            const McOptions& opts) {
  require_trials(opts.trials, 100, "mc_tail_probability");
  for (double t : ts) {
    if (!(t >= 0.0)) throw DomainError("mc_tail_probability: t must be non-negative");
  }
  const auto values = detail::collect_trials(
      opts.trials, opts.workers, [&](std::uint64_t i) { return state_tvd(spec, opts.seed, i); });
  const double mean = mean_and_stderr(values).mean;
  std::vector<TailReport> out;
  out.reserve(ts.size());
  for (double t : ts) {
    std::uint64_t hits = 0;
    for (double v : values) hits += std::abs(v - mean) >= t ? 1 : 0;
    TailReport r;
    r.t = t;
    r.empirical = static_cast<double>(hits) / static_cast<double>(opts.trials);
    r.levy_bound = levy_bound(spec.family(), spec.dim(), t);
    r.binomial_stderr = binomial_stderr(r.empirical, opts.trials);
    r.mean = mean;
    r.trials = opts.trials;
    out.push_back(r);
  }
  return out;
}

TailReport mc_tail_probability(const EnsembleSpec& spec, double t, const McOptions& opts) {
  const double ts[] = {t};
  return mc_tail_probability(spec, std::span<const double>(ts), opts).front();
}

McReport mc_ball_fraction(const EnsembleSpec& spec, double radius, const McOptions& opts) {
  require_trials(opts.trials, 100, "mc_ball_fraction");
  if (!(radius >= 0.0)) throw DomainError("mc_ball_fraction: radius must be non-negative");
  const auto start = Clock::now();
  const auto values = detail::collect_trials(opts.trials, opts.workers, [&](std::uint64_t i) {
    return state_tvd(spec, opts.seed, i) <= radius ? 1.0 : 0.0;
  });
  detail::CompensatedSum s;
  for (double v : values) s.add(v);
  const double p = s.value() / static_cast<double>(opts.trials);
  return {p, binomial_stderr(p, opts.trials), opts.trials, opts.seed, seconds_since(start)};
}

McReport mc_query_deviation(const EnsembleSpec& spec, const DiagObservable& phi, double tau,
                            const McOptions& opts) {
  require_trials(opts.trials, 100, "mc_query_deviation");
  if (phi.dim() != spec.dim()) {
    throw DomainError("mc_query_deviation: observable dimension does not match the ensemble");
  }
  if (!(tau >= 0.0)) throw DomainError("mc_query_deviation: tau must be non-negative");
  const double centre = phi.mean();
  const auto start = Clock::now();
  const auto values = detail::collect_trials(opts.trials, opts.workers, [&](std::uint64_t i) {
    RngStream rng(opts.seed, i);
    const BornDist p = BornDist::from_state(sample_state(spec, rng));
    detail::CompensatedSum s;
    for (int x = 0; x < p.dim(); ++x) s.add(phi.values()[static_cast<std::size_t>(x)] * p[x]);
    return std::abs(s.value() - centre) > tau ? 1.0 : 0.0;
  });
  detail::CompensatedSum s;
  for (double v : values) s.add(v);
  const double p = s.value() / static_cast<double>(opts.trials);
  return {p, binomial_stderr(p, opts.trials), opts.trials, opts.seed, seconds_since(start)};
}

}  // namespace symspace
