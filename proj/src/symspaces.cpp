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

#include "symspace/symspaces.hpp"

#include <array>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

bool needs_even_dim(SpaceFamily f) {
  return f == SpaceFamily::AII || f == SpaceFamily::DIII || f == SpaceFamily::CI ||
         f == SpaceFamily::CII;
}

bool needs_split(SpaceFamily f) {
  return f == SpaceFamily::AIII || f == SpaceFamily::BDI || f == SpaceFamily::CII;
}

std::string family_name(SpaceFamily f) {
  static constexpr std::array<const char*, 7> names{"AI", "AII", "AIII", "BDI",
                                                    "DIII", "CI", "CII"};
  return names[static_cast<int>(f)];
}

// J M J^T, using (J M J^T)_{ij} = s_i s_j M_{pi(i) pi(j)}.
ComplexMatrix conjugate_by_j(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows());
  const int h = d / 2;
  ComplexMatrix out(d, d);
  for (int j = 0; j < d; ++j) {
    const int pj = j < h ? j + h : j - h;
    const double sj = j < h ? 1.0 : -1.0;
    for (int i = 0; i < d; ++i) {
      const int pi = i < h ? i + h : i - h;
      const double si = i < h ? 1.0 : -1.0;
      out(i, j) = (si * sj) * m(pi, pj);
    }
  }
  return out;
}

// D M D for a diagonal sign matrix D.
ComplexMatrix conjugate_by_signs(const ComplexMatrix& m, const Eigen::VectorXd& signs) {
  return signs.asDiagonal() * m * signs.asDiagonal();
}

Eigen::VectorXd ipq_signs(int p, int q) {
  Eigen::VectorXd s(p + q);
  s.head(p).setOnes();
  s.tail(q).setConstant(-1.0);
  return s;
}

Eigen::VectorXd involution_signs(const SpaceSpec& spec) {
  const Split split = *spec.split();
  if (spec.family() == SpaceFamily::CII) {
    Eigen::VectorXd s(spec.dim());
    s << ipq_signs(split.p, split.q), ipq_signs(split.p, split.q);
    return s;
  }
  return ipq_signs(split.p, split.q);
}

ComplexMatrix sample_parent(const SpaceSpec& spec, RngStream& rng) {
  return sample_haar(GroupSpec(parent_group(spec.family()), spec.dim()), rng);
}

}  // namespace

SpaceSpec::SpaceSpec(SpaceFamily family, int dim, std::optional<Split> split)
    : family_(family), dim_(dim), split_(split) {
  const std::string name = family_name(family);
  if (dim < kMinDim) {
    throw DomainError(name + " requires d >= 4, got " + std::to_string(dim));
  }
  if (needs_even_dim(family) && dim % 2 != 0) {
    throw DomainError(name + " requires even d, got " + std::to_string(dim));
  }
  if (needs_split(family)) {
    if (!split) throw DomainError(name + " requires a (p, q) split");
    if (split->p < 1 || split->q < 1) {
      throw DomainError(name + " split needs p >= 1 and q >= 1");
    }
    const int total = family == SpaceFamily::CII ? 2 * (split->p + split->q)
                                                 : split->p + split->q;
    if (total != dim) {
      throw DomainError(name + " split (" + std::to_string(split->p) + ", " +
                        std::to_string(split->q) + ") is inconsistent with d = " +
                        std::to_string(dim));
    }
  } else if (split) {
    throw DomainError(name + " does not take a (p, q) split");
  }
}

GroupFamily parent_group(SpaceFamily family) {
  return (family == SpaceFamily::BDI || family == SpaceFamily::DIII) ? GroupFamily::Orthogonal
                                                                     : GroupFamily::Unitary;
}

ComplexMatrix build_j(int d) {
  if (d < kMinDim || d % 2 != 0) {
    throw DomainError("symplectic form needs even d >= 4, got " + std::to_string(d));
  }
  const int h = d / 2;
  ComplexMatrix j = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < h; ++i) {
    j(i, i + h) = 1.0;
    j(i + h, i) = -1.0;
  }
  return j;
}

Partner partner_index(int x, int d) {
  if (d < kMinDim || d % 2 != 0) {
    throw DomainError("partner map needs even d >= 4, got " + std::to_string(d));
  }
  if (x < 0 || x >= d) {
    throw DomainError("basis index " + std::to_string(x) + " out of range for d = " +
                      std::to_string(d));
  }
  const int h = d / 2;
  return x < h ? Partner{x + h, 1} : Partner{x - h, -1};
}

ComplexMatrix apply_involution(const SpaceSpec& spec, const ComplexMatrix& g) {
  if (g.rows() != spec.dim() || g.cols() != spec.dim()) {
    throw DomainError("matrix dimension does not match the symmetric space");
  }
  switch (spec.family()) {
    case SpaceFamily::AI:
      return g.conjugate();
    case SpaceFamily::AII:
      return conjugate_by_j(g.conjugate());
    case SpaceFamily::DIII:
    case SpaceFamily::CI:
      return conjugate_by_j(g);
    case SpaceFamily::AIII:
    case SpaceFamily::BDI:
    case SpaceFamily::CII:
      return conjugate_by_signs(g, involution_signs(spec));
  }
  throw DomainError("unknown symmetric-space family");
}

ComplexMatrix sample_space(const SpaceSpec& spec, RngStream& rng) {
  const ComplexMatrix g = sample_parent(spec, rng);
  return apply_involution(spec, g).adjoint() * g;
}

ComplexVector sample_space_column(const SpaceSpec& spec, RngStream& rng) {
  const ComplexMatrix g = sample_parent(spec, rng);
  return apply_involution(spec, g).adjoint() * g.col(0);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 10> kEnsembleNames{
    "unitary", "orthogonal", "symplectic", "ai", "aii", "aiii", "bdi", "diii", "ci", "cii"};

}  // namespace

std::string_view to_string(Ensemble e) noexcept {
  return kEnsembleNames[static_cast<std::size_t>(e)];
}

std::optional<Ensemble> parse_ensemble(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kEnsembleNames.size(); ++i) {
    if (kEnsembleNames[i] == name) return static_cast<Ensemble>(i);
  }
  return std::nullopt;
}

bool is_group(Ensemble e) noexcept {
  return e == Ensemble::Unitary || e == Ensemble::Orthogonal || e == Ensemble::Symplectic;
}

std::optional<SpaceFamily> space_family(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::AI: return SpaceFamily::AI;
    case Ensemble::AII: return SpaceFamily::AII;
    case Ensemble::AIII: return SpaceFamily::AIII;
    case Ensemble::BDI: return SpaceFamily::BDI;
    case Ensemble::DIII: return SpaceFamily::DIII;
    case Ensemble::CI: return SpaceFamily::CI;
    case Ensemble::CII: return SpaceFamily::CII;
    default: return std::nullopt;
  }
}

EnsembleSpec::EnsembleSpec(Ensemble family, int dim, std::optional<Split> split)
    : family_(family), dim_(dim), split_(split) {
  if (const auto sf = space_family(family)) {
    SpaceSpec(*sf, dim, split);  // validates
    return;
  }
  if (split) throw DomainError("group ensembles do not take a (p, q) split");
  if (family == Ensemble::Symplectic) {
    if (dim < kMinDim || dim % 2 != 0) {
      throw DomainError("symplectic ensemble requires even d >= 4, got " + std::to_string(dim));
    }
    return;
  }
  GroupSpec(family == Ensemble::Orthogonal ? GroupFamily::Orthogonal : GroupFamily::Unitary,
            dim);
}

SpaceSpec EnsembleSpec::space() const {
  const auto sf = space_family(family_);
  if (!sf) {
    throw DomainError(std::string(to_string(family_)) + " is a group, not a symmetric space");
  }
  return SpaceSpec(*sf, dim_, split_);
}

ComplexMatrix sample_ensemble(const EnsembleSpec& spec, RngStream& rng) {
  switch (spec.family()) {
    case Ensemble::Unitary:
      return sample_haar(GroupSpec(GroupFamily::Unitary, spec.dim()), rng);
    case Ensemble::Orthogonal:
      return sample_haar(GroupSpec(GroupFamily::Orthogonal, spec.dim()), rng);
    case Ensemble::Symplectic:
      throw DomainError("Haar sampling of the compact symplectic group is not supported");
    default:
      return sample_space(spec.space(), rng);
  }
}

ComplexVector sample_state(const EnsembleSpec& spec, RngStream& rng) {
  switch (spec.family()) {
    case Ensemble::Unitary:
    case Ensemble::Symplectic:
      return sample_gaussian_vector(spec.dim(), Field::Complex, rng).normalized();
    case Ensemble::Orthogonal:
      return sample_gaussian_vector(spec.dim(), Field::Real, rng).normalized();
    default:
      return sample_space_column(spec.space(), rng);
  }
}

}  // namespace symspace
