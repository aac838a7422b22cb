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

#include <optional>
#include <string>
#include <string_view>

#include "symspace/matrixcore.hpp"

namespace symspace {

/// The seven compact symmetric-space families of Cartan's classification.
enum class SpaceFamily { AI, AII, AIII, BDI, DIII, CI, CII };

/// Block sizes (p, q) for the families whose involution is Ad_{I_{p,q}}.
struct Split {
  int p = 0;
  int q = 0;
};

/// A symmetric space of d x d unitaries.
///
/// AII, DIII, CI and CII need even d (the symplectic form J is involved);
/// AIII and BDI need p + q = d; CII needs 2 (p + q) = d.
class SpaceSpec {
 public:
  SpaceSpec(SpaceFamily family, int dim, std::optional<Split> split = std::nullopt);

  SpaceFamily family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  const std::optional<Split>& split() const noexcept { return split_; }

 private:
  SpaceFamily family_;
  int dim_;
  std::optional<Split> split_;
};

/// Group on which the coset sampler draws g. BDI and DIII live in O(d);
/// every other family uses U(d).
GroupFamily parent_group(SpaceFamily family);

/// Canonical symplectic form [[0, 1], [-1, 0]] in d/2 x d/2 blocks.
ComplexMatrix build_j(int d);

struct Partner {
  int index;
  int sign;
};

/// The index x' with e_x^T J = sign * e_{x'}^T.
Partner partner_index(int x, int d);

/// The involution sigma of the given family applied to g.
ComplexMatrix apply_involution(const SpaceSpec& spec, const ComplexMatrix& g);

/// Uniform sample V = sigma(g)^{-1} g with g Haar on the parent group.
ComplexMatrix sample_space(const SpaceSpec& spec, RngStream& rng);

/// V|0> for V drawn as in sample_space, consuming the same random numbers;
/// avoids the full matrix product.
ComplexVector sample_space_column(const SpaceSpec& spec, RngStream& rng);

// ---------------------------------------------------------------------------
// Unified ensemble identifiers (groups and symmetric spaces).

enum class Ensemble { Unitary, Orthogonal, Symplectic, AI, AII, AIII, BDI, DIII, CI, CII };

std::string_view to_string(Ensemble e) noexcept;
std::optional<Ensemble> parse_ensemble(std::string_view name) noexcept;

bool is_group(Ensemble e) noexcept;
std::optional<SpaceFamily> space_family(Ensemble e) noexcept;

/// Any supported ensemble together with its dimension and optional split.
class EnsembleSpec {
 public:
  EnsembleSpec(Ensemble family, int dim, std::optional<Split> split = std::nullopt);

  Ensemble family() const noexcept { return family_; }
  int dim() const noexcept { return dim_; }
  const std::optional<Split>& split() const noexcept { return split_; }

  /// Symmetric-space view; throws DomainError for the group families.
  SpaceSpec space() const;

 private:
  Ensemble family_;
  int dim_;
  std::optional<Split> split_;
};

/// Full random matrix from the ensemble. The compact symplectic group is not
/// sampled (quaternionic Haar sampling is outside this library) and raises
/// DomainError.
ComplexMatrix sample_ensemble(const EnsembleSpec& spec, RngStream& rng);

/// The state V|0>. For the groups this is a normalized Gaussian vector, which
/// has the law of a Haar column; the symplectic group shares the column law
/// of U(d) (both are uniform on the complex unit sphere).
ComplexVector sample_state(const EnsembleSpec& spec, RngStream& rng);

}  // namespace symspace
