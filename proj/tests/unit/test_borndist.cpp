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

#include <algorithm>
#include <cmath>
#include <vector>

#include "symspace/borndist.hpp"
#include "symspace/error.hpp"
#include "symspace/matrixcore.hpp"

using namespace symspace;

TEST_CASE("born distribution examples") {
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  const auto p = born_distribution(id);
  CHECK(p.dim() == 4);
  CHECK(p[0] == 1.0);
  CHECK(p[1] == 0.0);
  CHECK(born_distribution(id, 2)[2] == 1.0);

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  ComplexMatrix hh(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) hh(r, c) = h(r / 2, c / 2) * h(r % 2, c % 2);
  }
  const auto uniform = born_distribution(hh);
  for (double v : uniform.probs()) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));

  for (int i = 0; i < 20; ++i) {
    RngStream rng(1, i);
    const auto q = born_distribution(sample_haar(GroupSpec(GroupFamily::Unitary, 16), rng));
    double s = 0.0;
    for (double v : q.probs()) s += v;
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("born distribution errors") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(0, 0) = 3.0;
  CHECK_THROWS_AS(born_distribution(m), InvariantError);
  CHECK_THROWS_AS(born_distribution(ComplexMatrix::Identity(4, 4), 4), DomainError);
  CHECK_THROWS_AS(BornDist({0.5, 0.6}), InvariantError);
  CHECK_THROWS_AS(BornDist({1.5, -0.5}), InvariantError);
}

TEST_CASE("tvd examples") {
  CHECK(tvd_to_uniform(BornDist({0.25, 0.25, 0.25, 0.25})) == 0.0);
  CHECK(tvd_to_uniform(BornDist({1.0, 0.0, 0.0, 0.0})) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(tvd_to_uniform(BornDist({0.5, 0.5, 0.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-15));
  std::vector<double> u(7, 1.0 / 7);
  CHECK(tvd_to_uniform(BornDist(u)) <= 1e-15);
}

TEST_CASE("tvd is permutation invariant") {
  RngStream rng(2, 0);
  const auto p = born_distribution(sample_haar(GroupSpec(GroupFamily::Unitary, 8), rng));
  std::vector<double> v(p.probs().begin(), p.probs().end());
  const double base = tvd_to_uniform(p);
  std::sort(v.begin(), v.end());
  do {
    CHECK(std::abs(tvd_to_uniform(BornDist(v)) - base) <= 1e-15);
  } while (std::next_permutation(v.begin(), v.begin() + 4));
}

TEST_CASE("tvd is 1-Lipschitz in the matrix") {
  for (int i = 0; i < 200; ++i) {
    RngStream a(3, i);
    const auto u = sample_haar(GroupSpec(GroupFamily::Unitary, 8), a);
    RngStream b(4, i);
    ComplexMatrix v = sample_haar(GroupSpec(GroupFamily::Unitary, 8), b);
    if (i % 2 == 0) {
      const double t = 0.01 * (i % 7 + 1);
      ComplexMatrix rot = ComplexMatrix::Identity(8, 8);
      rot(0, 0) = rot(1, 1) = std::cos(t);
      rot(0, 1) = -std::sin(t);
      rot(1, 0) = std::sin(t);
      v = rot * u;
    }
    const double lhs = std::abs(tvd_to_uniform(born_distribution(u)) - tvd_to_uniform(born_distribution(v)));
    CHECK(lhs <= (u - v).norm() + 1e-9);
  }
}

TEST_CASE("statistical query values") {
  RngStream rng(5, 0);
  const auto v = sample_haar(GroupSpec(GroupFamily::Unitary, 4), rng);
  CHECK(sq_value(v, DiagObservable({1, 1, 1, 1})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sq_value(v, DiagObservable({-1, -1, -1, -1})) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sq_value(ComplexMatrix::Identity(4, 4), DiagObservable({1, 0, 0, 0})) == 1.0);
  for (int i = 0; i < 50; ++i) {
    RngStream r(6, i);
    const auto w = sample_haar(GroupSpec(GroupFamily::Unitary, 8), r);
    std::vector<double> phi(8);
    double bound = 0.0;
    for (auto& x : phi) {
      x = 2 * r.uniform() - 1;
      bound = std::max(bound, std::abs(x));
    }
    CHECK(std::abs(sq_value(w, DiagObservable(phi))) <= bound + 1e-15);
  }
  CHECK(DiagObservable({1, -1, 0.5, 0.5}).mean() == doctest::Approx(0.25));
  CHECK_THROWS_AS(DiagObservable({1.5}), InvariantError);
  CHECK_THROWS_AS(sq_value(v, DiagObservable({1, 1})), DomainError);
}
