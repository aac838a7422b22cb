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

#include "symspace/specialfns.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "symspace/error.hpp"

namespace symspace::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxFractionTerms = 20000;
constexpr long kMaxSeriesTerms = 1000000;
constexpr double kSeriesCutoff = 1e-16;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(v));
  }
}

void require_unit_interval(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("argument must lie in [0, 1], got " + std::to_string(z));
  }
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Continued fraction for I_z(a, b) (modified Lentz). Converges quickly for
// z < (a + 1) / (a + b + 2).
double beta_fraction(double a, double b, double z) {
  double c = 1.0;
  double d = 1.0 - (a + b) * z / (a + 1.0);
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxFractionTerms; ++m) {
    const double m2 = 2.0 * m;
    double coeff = m * (b - m) * z / ((a - 1.0 + m2) * (a + m2));
    d = 1.0 + coeff * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + coeff / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    coeff = -(a + m) * (a + b + m) * z / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + coeff * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + coeff / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 2.0 * kEps) return h;
  }
  throw Error("incomplete beta continued fraction did not converge");
}

// z^a (1-z)^b / a * CF(a, b, z), the unregularized lower tail.
double lower_tail(double z, double a, double b) {
  const double log_front = a * std::log(z) + b * std::log1p(-z);
  return std::exp(log_front) * beta_fraction(a, b, z) / a;
}

bool use_direct_fraction(double z, double a, double b) {
  return z < (a + 1.0) / (a + b + 2.0);
}

// Sum of the 2F1 power series for |z| < 1 or z = 1.
double hyp2f1_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  double carry = 0.0;
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    term *= ratio;
    // Neumaier summation
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
    if (term == 0.0) return sum + carry;
    if (std::fabs(term) < kSeriesCutoff * std::fabs(sum + carry) && std::fabs(ratio) < 1.0) {
      return sum + carry;
    }
  }
  throw DomainError("2F1 series did not converge within 10^6 terms");
}

}  // namespace

BetaParams::BetaParams(double a_shape, double b_shape) : a(a_shape), b(b_shape) {
  require_positive(a, "beta shape a");
  require_positive(b, "beta shape b");
}

double ScaledValue::value() const {
  if (mantissa == 0.0) return 0.0;
  return mantissa * std::exp(log_scale);
}

double ln_gamma(double x) {
  require_positive(x, "ln_gamma argument");
  return boost::math::lgamma(x);
}

double ln_beta(double a, double b) {
  require_positive(a, "beta argument a");
  require_positive(b, "beta argument b");
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

double beta_fn(double a, double b) { return std::exp(ln_beta(a, b)); }

double inc_beta(double z, double a, double b) {
  require_unit_interval(z);
  require_positive(a, "incomplete beta a");
  require_positive(b, "incomplete beta b");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return beta_fn(a, b);
  if (use_direct_fraction(z, a, b)) return lower_tail(z, a, b);
  return beta_fn(a, b) - lower_tail(1.0 - z, b, a);
}

double reg_inc_beta(double z, double a, double b) {
  require_unit_interval(z);
  require_positive(a, "incomplete beta a");
  require_positive(b, "incomplete beta b");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return 1.0;
  const double lnb = ln_beta(a, b);
  if (use_direct_fraction(z, a, b)) {
    const double log_front = a * std::log(z) + b * std::log1p(-z) - lnb;
    return std::exp(log_front) * beta_fraction(a, b, z) / a;
  }
  const double w = 1.0 - z;
  const double log_front = b * std::log(w) + a * std::log1p(-w) - lnb;
  return 1.0 - std::exp(log_front) * beta_fraction(b, a, w) / b;
}

ScaledValue hyp2f1_scaled(const HypergeomArgs& args) {
  const auto [a, b, c, z] = args;
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("2F1 arguments must be finite");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("2F1 parameter c must not be a non-positive integer");
  }
  if (z == 0.0) return {1.0, 0.0};
  if (z > 1.0) throw DomainError("2F1 argument z > 1 is outside the supported regime");
  if (z == 1.0) {
    if (!(c - a - b > 0.0)) {
      throw DomainError("2F1 at z = 1 diverges unless c - a - b > 0");
    }
    return {hyp2f1_series(a, b, c, 1.0), 0.0};
  }
  if (z < 0.0) {
    // Pfaff: (1 - z)^{-b} 2F1(c - a, b; c; z / (z - 1)), argument now in (0, 1).
    const double w = z / (z - 1.0);
    return {hyp2f1_series(c - a, b, c, w), -b * std::log1p(-z)};
  }
  return {hyp2f1_series(a, b, c, z), 0.0};
}

double hyp2f1(const HypergeomArgs& args) { return hyp2f1_scaled(args).value(); }

double beta_pdf(double x, const BetaParams& p) {
  require_unit_interval(x);
  const double lnb = ln_beta(p.a, p.b);
  if (x == 0.0) {
    if (p.a < 1.0) return std::numeric_limits<double>::infinity();
    return p.a == 1.0 ? std::exp(-lnb) : 0.0;
  }
  if (x == 1.0) {
    if (p.b < 1.0) return std::numeric_limits<double>::infinity();
    return p.b == 1.0 ? std::exp(-lnb) : 0.0;
  }
  return std::exp((p.a - 1.0) * std::log(x) + (p.b - 1.0) * std::log1p(-x) - lnb);
}

double beta_cdf(double x, const BetaParams& p) { return reg_inc_beta(x, p.a, p.b); }

}  // namespace symspace::special
