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

// Scalar special functions: log-gamma, complete and incomplete beta
// functions, the Gauss hypergeometric function 2F1 on the real line, and the
// beta distribution. All functions are pure and reentrant.

namespace symspace::special {

/// Shape parameters of a Beta(a, b) law; both must be positive.
struct BetaParams {
  double a;
  double b;

  BetaParams(double a_shape, double b_shape);
};

/// Arguments of 2F1(a, b; c; z).
struct HypergeomArgs {
  double a;
  double b;
  double c;
  double z;
};

/// A positive or signed quantity stored as mantissa * exp(log_scale), used
/// where the value itself would under- or overflow a double.
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double value() const;
};

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// log B(a, b).
double ln_beta(double a, double b);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta_fn(double a, double b);

/// Incomplete beta function B_z(a, b) = int_0^z u^{a-1} (1-u)^{b-1} du.
double inc_beta(double z, double a, double b);

/// Regularized incomplete beta I_z(a, b) = B_z(a, b) / B(a, b).
///
/// Evaluated with the standard continued fraction; for
/// z > (a + 1) / (a + b + 2) the reflection I_z(a, b) = 1 - I_{1-z}(b, a)
/// is used instead.
double reg_inc_beta(double z, double a, double b);

/// Gauss hypergeometric function on the real line.
///
/// Supported regimes: |z| < 1, z = 1 with c - a - b > 0, and any z < 0,
/// which is first mapped into (0, 1) by Pfaff's transformation
///   2F1(a, b; c; z) = (1 - z)^{-b} 2F1(c - a, b; c; z / (z - 1)).
/// The power series is summed until the relative term drops below 1e-16,
/// with a hard cap of 10^6 terms. The prefactor is returned in log space.
ScaledValue hyp2f1_scaled(const HypergeomArgs& args);

/// hyp2f1_scaled(args).value(); may underflow for large Pfaff prefactors.
double hyp2f1(const HypergeomArgs& args);

/// Density x^{a-1} (1-x)^{b-1} / B(a, b) on [0, 1].
double beta_pdf(double x, const BetaParams& p);

/// Cumulative distribution function, i.e. I_x(a, b).
double beta_cdf(double x, const BetaParams& p);

}  // namespace symspace::special
