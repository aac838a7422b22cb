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

#include "doctest.h"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>
#include <numbers>

#include "symspace/closedform.hpp"
#include "symspace/error.hpp"

using namespace symspace;

namespace {

const double kInvE = std::exp(-1.0);
const double kOrthLimit = std::sqrt(2.0 / (std::numbers::pi * std::numbers::e));

double integrate(const std::function<double(double)>& f, double lo, double hi) {
  static boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, lo, hi, 1e-14);
}

// E |d X - 1| for X ~ Beta(a, b), by quadrature against the boost density.
double abs_dev(double d, double a, double b) {
  const boost::math::beta_distribution<double> law(a, b);
  auto f = [&](double x) { return std::abs(d * x - 1.0) * boost::math::pdf(law, x); };
  return integrate(f, 0.0, 1.0 / d) + integrate(f, 1.0 / d, 1.0);
}

// E |c X - 1| for X ~ Beta(1, m).
double abs_dev_beta1(double c, double m) {
  const double tail = c > 1.0 ? std::pow(1.0 - 1.0 / c, m + 1.0) : 0.0;
  return 1.0 - c / (m + 1.0) + 2.0 * c / (m + 1.0) * tail;
}

// AI generic entry: d (1 - T) X with T ~ Beta(1, (d-1)/2), X ~ Beta(1, d-2).
double ai_generic_oracle(double d) {
  const boost::math::beta_distribution<double> t_law(1.0, (d - 1.0) / 2.0);
  auto f = [&](double t) { return abs_dev_beta1(d * (1.0 - t), d - 2.0) * boost::math::pdf(t_law, t); };
  const double kink = 1.0 - 1.0 / d;
  return integrate(f, 0.0, kink) + integrate(f, kink, 1.0);
}

double tvd_oracle(Ensemble e, int di) {
  const double d = di;
  switch (e) {
    case Ensemble::Unitary:
    case Ensemble::Symplectic:
      return 0.5 * abs_dev(d, 1.0, d - 1.0);
    case Ensemble::Orthogonal:
      return 0.5 * abs_dev(d, 0.5, (d - 1.0) / 2.0);
    case Ensemble::AI:
      return (abs_dev(d, 1.0, (d - 1.0) / 2.0) + (d - 1.0) * ai_generic_oracle(d)) / (2.0 * d);
    case Ensemble::AII:
      return (1.0 + (d - 1.0) * abs_dev(d, 1.0, d - 2.0)) / (2.0 * d);
    case Ensemble::DIII:
      return (1.0 + (d - 1.0) * abs_dev(d, 0.5, (d - 2.0) / 2.0)) / (2.0 * d);
    default:
      throw DomainError("no oracle");
  }
}

const Ensemble kFamilies[] = {Ensemble::Unitary, Ensemble::Orthogonal, Ensemble::Symplectic,
                              Ensemble::AI,      Ensemble::AII,        Ensemble::DIII};

bool needs_even(Ensemble e) {
  return e == Ensemble::Symplectic || e == Ensemble::AII || e == Ensemble::DIII;
}

}  // namespace

TEST_CASE("ensemble id validation") {
  CHECK_THROWS_AS(EnsembleId(Ensemble::AIII, 8), DomainError);
  CHECK_THROWS_AS(EnsembleId(Ensemble::AII, 5), DomainError);
  CHECK_THROWS_AS(EnsembleId(Ensemble::Unitary, 3), DomainError);
  CHECK(has_closed_form(Ensemble::DIII));
  CHECK_FALSE(has_closed_form(Ensemble::CI));
}

TEST_CASE("expected tvd examples") {
  CHECK(expected_tvd(EnsembleId(Ensemble::Unitary, 4)) == doctest::Approx(81.0 / 256.0).epsilon(1e-14));
  CHECK(expected_tvd(EnsembleId(Ensemble::AII, 4)) == 0.421875);
  CHECK(expected_tvd(EnsembleId(Ensemble::Orthogonal, 4)) == doctest::Approx(0.4134966716).epsilon(1e-9));
  CHECK(expected_tvd(EnsembleId(Ensemble::DIII, 4)) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(expected_tvd(EnsembleId(Ensemble::Symplectic, 10)) ==
        expected_tvd(EnsembleId(Ensemble::Unitary, 10)));
}

TEST_CASE("expected tvd against quadrature of the entry laws") {
  for (auto e : kFamilies) {
    for (int d : {4, 6, 8, 10, 16, 32, 64, 256}) {
      const double want = tvd_oracle(e, d);
      CHECK_MESSAGE(std::abs(expected_tvd(EnsembleId(e, d)) - want) <= 1e-10 * want,
                    to_string(e) << " d=" << d);
    }
  }
  for (int d : {5, 7, 33}) {
    for (auto e : {Ensemble::Unitary, Ensemble::Orthogonal, Ensemble::AI}) {
      const double want = tvd_oracle(e, d);
      CHECK(std::abs(expected_tvd(EnsembleId(e, d)) - want) <= 1e-10 * want);
    }
  }
}

TEST_CASE("per-entry deviations against quadrature") {
  for (int d : {4, 8, 16, 64}) {
    const double dd = d;
    CHECK(per_entry_deviation(EnsembleId(Ensemble::AI, d), EntrySlot::Diagonal) ==
          doctest::Approx(abs_dev(dd, 1.0, (dd - 1) / 2)).epsilon(1e-10));
    CHECK(per_entry_deviation(EnsembleId(Ensemble::AI, d), EntrySlot::Generic) ==
          doctest::Approx(ai_generic_oracle(dd)).epsilon(1e-9));
    CHECK(per_entry_deviation(EnsembleId(Ensemble::AII, d), EntrySlot::Generic) ==
          doctest::Approx(abs_dev(dd, 1.0, dd - 2)).epsilon(1e-10));
    CHECK(per_entry_deviation(EnsembleId(Ensemble::DIII, d), EntrySlot::Generic) ==
          doctest::Approx(abs_dev(dd, 0.5, (dd - 2) / 2)).epsilon(1e-10));
    CHECK(per_entry_deviation(EnsembleId(Ensemble::Unitary, d), EntrySlot::Generic) ==
          doctest::Approx(abs_dev(dd, 1.0, dd - 1)).epsilon(1e-10));
  }
}

TEST_CASE("per-entry deviation examples") {
  CHECK(per_entry_deviation(EnsembleId(Ensemble::AII, 4), EntrySlot::Partner) == 1.0);
  CHECK(per_entry_deviation(EnsembleId(Ensemble::DIII, 8), EntrySlot::Partner) == 1.0);
  CHECK(per_entry_deviation(EnsembleId(Ensemble::AII, 4), EntrySlot::Generic) ==
        doctest::Approx(19.0 / 24.0).epsilon(1e-14));
  CHECK(per_entry_deviation(EnsembleId(Ensemble::AI, 4), EntrySlot::Diagonal) ==
        doctest::Approx(0.9588457).epsilon(1e-7));
  CHECK_THROWS_AS(per_entry_deviation(EnsembleId(Ensemble::AI, 4), EntrySlot::Partner), DomainError);
  CHECK_THROWS_AS(per_entry_deviation(EnsembleId(Ensemble::AII, 4), EntrySlot::Diagonal), DomainError);
  CHECK_THROWS_AS(per_entry_deviation(EnsembleId(Ensemble::Unitary, 4), EntrySlot::Partner), DomainError);
}

TEST_CASE("aggregation identities") {
  for (int d = 4; d <= 1024; d += 2) {
    const double dd = d;
    const EnsembleId aii(Ensemble::AII, d);
    const EnsembleId diii(Ensemble::DIII, d);
    const EnsembleId ai(Ensemble::AI, d);
    CHECK(std::abs((per_entry_deviation(aii, EntrySlot::Partner) +
                    (dd - 1) * per_entry_deviation(aii, EntrySlot::Generic)) / (2 * dd) -
                   expected_tvd(aii)) <= 1e-12);
    CHECK(std::abs((per_entry_deviation(diii, EntrySlot::Partner) +
                    (dd - 1) * per_entry_deviation(diii, EntrySlot::Generic)) / (2 * dd) -
                   expected_tvd(diii)) <= 1e-12);
    CHECK(std::abs((per_entry_deviation(ai, EntrySlot::Diagonal) +
                    (dd - 1) * per_entry_deviation(ai, EntrySlot::Generic)) / (2 * dd) -
                   expected_tvd(ai)) <= 1e-9);
  }
}

TEST_CASE("asymptotes") {
  CHECK(asymptote(Ensemble::Unitary) == doctest::Approx(0.3678794).epsilon(1e-7));
  CHECK(asymptote(Ensemble::DIII) == doctest::Approx(0.4839414).epsilon(1e-7));
  CHECK(asymptote(Ensemble::AI) == kInvE);
  CHECK(asymptote(Ensemble::AII) == kInvE);
  CHECK(asymptote(Ensemble::Orthogonal) == kOrthLimit);
  CHECK(asymptote(Ensemble::Symplectic) == kInvE);
}

TEST_CASE("intervals") {
  const auto ai = appendix_interval(EnsembleId(Ensemble::AI, 100));
  CHECK(ai.lower == doctest::Approx(kInvE - 0.05).epsilon(1e-15));
  CHECK(ai.upper == doctest::Approx(kInvE + 0.05).epsilon(1e-15));
  const auto diii = appendix_interval(EnsembleId(Ensemble::DIII, 100));
  CHECK(diii.lower == doctest::Approx(kOrthLimit - 0.1).epsilon(1e-15));
  CHECK(diii.upper == doctest::Approx(kOrthLimit + 0.05).epsilon(1e-15));
  CHECK(appendix_interval(EnsembleId(Ensemble::AII, 20)).contains(std::pow(0.95, 19)));
  CHECK(interval_is_proven(Ensemble::AI));
  CHECK(interval_is_proven(Ensemble::DIII));
  CHECK_FALSE(interval_is_proven(Ensemble::Unitary));
}

TEST_CASE("expected tvd lies in its interval and converges") {
  for (auto e : kFamilies) {
    for (int d = 4; d <= 1024; ++d) {
      if (needs_even(e) && d % 2 != 0) continue;
      const EnsembleId id(e, d);
      const double v = expected_tvd(id);
      CHECK_MESSAGE(appendix_interval(id).contains(v), to_string(e) << " d=" << d);
      CHECK(std::abs(v - asymptote(e)) <= 10.0 / d);
    }
  }
}

TEST_CASE("large dimensions stay finite") {
  for (auto e : kFamilies) {
    const double v = expected_tvd(EnsembleId(e, 2048));
    CHECK(std::isfinite(v));
    CHECK(std::abs(v - asymptote(e)) <= 10.0 / 2048);
  }
}

TEST_CASE("twirl examples") {
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  CHECK((twirl_closed_form(EnsembleId(Ensemble::AI, 4), id) - id).norm() <= 1e-15);
  CHECK((twirl_closed_form(EnsembleId(Ensemble::AII, 4), id) - id).norm() <= 1e-15);
  CHECK((twirl_closed_form(EnsembleId(Ensemble::DIII, 4), id) - id).norm() <= 1e-15);
  ComplexMatrix p0 = ComplexMatrix::Zero(4, 4);
  p0(0, 0) = 1.0;
  CHECK((twirl_closed_form(EnsembleId(Ensemble::AI, 4), p0) - (id + p0) / 5.0).norm() <= 1e-15);
  CHECK_THROWS_AS(twirl_closed_form(EnsembleId(Ensemble::Unitary, 4), id), DomainError);
  CHECK_THROWS_AS(twirl_closed_form(EnsembleId(Ensemble::AI, 5), id), DomainError);
}

TEST_CASE("twirls preserve the trace") {
  RngStream rng(1, 0);
  for (auto e : {Ensemble::AI, Ensemble::AII, Ensemble::DIII}) {
    for (int d : {4, 8, 12}) {
      ComplexMatrix a(d, d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) a(r, c) = Complex(rng.normal(), rng.normal());
      }
      CHECK(std::abs(twirl_closed_form(EnsembleId(e, d), a).trace() - a.trace()) <= 1e-12);
    }
  }
}

TEST_CASE("wendel bounds") {
  const auto b = wendel_bounds(1.0, 0.5);
  CHECK(b.lower == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(b.upper == 1.0);
  CHECK(gamma_ratio(1.0, 0.5) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-13));
  CHECK(b.contains(gamma_ratio(1.0, 0.5)));
  CHECK(wendel_bounds(10.0, 0.5).contains(gamma_ratio(10.0, 0.5)));
  for (int i = 0; i < 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double x = std::pow(10.0, -1.0 + 0.5 * i);
      const double s = j / 11.0;
      CHECK(wendel_bounds(x, s).contains(gamma_ratio(x, s)));
      CHECK(gamma_ratio(x, s) <= 1.0);
    }
  }
  CHECK_THROWS_AS(wendel_bounds(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(wendel_bounds(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(wendel_bounds(1.0, 0.0), DomainError);
}
