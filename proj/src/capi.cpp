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

#include "symspace/symspace.h"

#include <cstring>
#include <new>
#include <string>

#include "symspace/borndist.hpp"
#include "symspace/closedform.hpp"
#include "symspace/error.hpp"
#include "symspace/matrixcore.hpp"
#include "symspace/sqbound.hpp"
#include "symspace/symspaces.hpp"
#include "symspace/verify.hpp"

struct symspace_matrix {
  symspace::ComplexMatrix m;
};

namespace {

thread_local std::string g_last_error;

symspace_status fail(symspace_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class Fn>
symspace_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYMSPACE_OK;
  } catch (const symspace::DomainError& e) {
    return fail(SYMSPACE_ERR_DOMAIN, e.what());
  } catch (const symspace::InvariantError& e) {
    return fail(SYMSPACE_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SYMSPACE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SYMSPACE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SYMSPACE_ERR_INTERNAL, "unknown error");
  }
}

bool valid_family(symspace_ensemble f) {
  return static_cast<int>(f) >= SYMSPACE_UNITARY && static_cast<int>(f) <= SYMSPACE_CII;
}

symspace::Ensemble to_cpp(symspace_ensemble f) {
  if (!valid_family(f)) throw symspace::DomainError("unknown ensemble code");
  return static_cast<symspace::Ensemble>(f);
}

symspace::EnsembleSpec to_cpp(const symspace_ensemble_spec& s) {
  std::optional<symspace::Split> split;
  if (s.split_p != 0 || s.split_q != 0) split = symspace::Split{s.split_p, s.split_q};
  return symspace::EnsembleSpec(to_cpp(s.family), s.dim, split);
}

symspace::McOptions to_cpp(const symspace_mc_options& o) {
  return {o.trials, o.seed, o.workers == 0 ? 1U : o.workers};
}

symspace::SqMode to_cpp(symspace_sq_mode m) {
  if (m == SYMSPACE_SQ_COMBINED) return symspace::SqMode::Combined;
  if (m == SYMSPACE_SQ_PER_ENSEMBLE) return symspace::SqMode::PerEnsemble;
  throw symspace::DomainError("unknown sq mode");
}

void write_report(const symspace::McReport& r, symspace_mc_report* out) {
  *out = {r.estimate, r.std_error, r.trials, r.master_seed, r.wall_time_s};
}

symspace_matrix* wrap(symspace::ComplexMatrix m) { return new symspace_matrix{std::move(m)}; }

#define SYMSPACE_REQUIRE(cond)                                              \
  do {                                                                      \
    if (!(cond)) return fail(SYMSPACE_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* symspace_version(void) { return SYMSPACE_VERSION; }

const char* symspace_last_error(void) { return g_last_error.c_str(); }

const char* symspace_ensemble_name(symspace_ensemble family) {
  if (!valid_family(family)) return "";
  return symspace::to_string(static_cast<symspace::Ensemble>(family)).data();
}

symspace_status symspace_parse_ensemble(const char* name, symspace_ensemble* out) {
  SYMSPACE_REQUIRE(name != nullptr && out != nullptr);
  const auto e = symspace::parse_ensemble(name);
  if (!e) return fail(SYMSPACE_ERR_DOMAIN, (std::string("unknown ensemble: ") + name).c_str());
  *out = static_cast<symspace_ensemble>(*e);
  g_last_error.clear();
  return SYMSPACE_OK;
}

symspace_status symspace_validate_spec(const symspace_ensemble_spec* spec) {
  SYMSPACE_REQUIRE(spec != nullptr);
  return guarded([&] { (void)to_cpp(*spec); });
}

symspace_status symspace_matrix_create(int dim, const double* entries, symspace_matrix** out) {
  SYMSPACE_REQUIRE(out != nullptr);
  SYMSPACE_REQUIRE(dim > 0);
  return guarded([&] {
    symspace::ComplexMatrix m = symspace::ComplexMatrix::Zero(dim, dim);
    if (entries != nullptr) {
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          const std::size_t k = 2 * (static_cast<std::size_t>(r) * dim + c);
          m(r, c) = symspace::Complex(entries[k], entries[k + 1]);
        }
      }
    }
    *out = wrap(std::move(m));
  });
}

void symspace_matrix_destroy(symspace_matrix* m) { delete m; }

int symspace_matrix_dim(const symspace_matrix* m) {
  return m == nullptr ? 0 : static_cast<int>(m->m.rows());
}

symspace_status symspace_matrix_copy_out(const symspace_matrix* m, double* entries, size_t len) {
  SYMSPACE_REQUIRE(m != nullptr && entries != nullptr);
  const auto d = static_cast<std::size_t>(m->m.rows());
  SYMSPACE_REQUIRE(len == 2 * d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const auto z = m->m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      entries[2 * (r * d + c)] = z.real();
      entries[2 * (r * d + c) + 1] = z.imag();
    }
  }
  g_last_error.clear();
  return SYMSPACE_OK;
}

symspace_status symspace_unitarity_defect(const symspace_matrix* m, double* out) {
  SYMSPACE_REQUIRE(m != nullptr && out != nullptr);
  return guarded([&] { *out = symspace::unitarity_defect(m->m); });
}

symspace_status symspace_sample(const symspace_ensemble_spec* spec, uint64_t seed, uint64_t index,
                                symspace_matrix** out) {
  SYMSPACE_REQUIRE(spec != nullptr && out != nullptr);
  return guarded([&] {
    symspace::RngStream rng(seed, index);
    *out = wrap(symspace::sample_ensemble(to_cpp(*spec), rng));
  });
}

symspace_status symspace_random_hermitian(int dim, uint64_t seed, uint64_t index,
                                          symspace_matrix** out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] {
    symspace::RngStream rng(seed, index);
    *out = wrap(symspace::random_hermitian(dim, rng));
  });
}

symspace_status symspace_born_distribution(const symspace_matrix* v, int ref_index, double* probs,
                                           size_t len) {
  SYMSPACE_REQUIRE(v != nullptr && probs != nullptr);
  SYMSPACE_REQUIRE(len == static_cast<size_t>(v->m.rows()));
  return guarded([&] {
    const auto p = symspace::born_distribution(v->m, ref_index);
    std::memcpy(probs, p.probs().data(), len * sizeof(double));
  });
}

symspace_status symspace_tvd_to_uniform(const double* probs, size_t len, double* out) {
  SYMSPACE_REQUIRE(probs != nullptr && out != nullptr && len > 0);
  return guarded([&] {
    *out = symspace::tvd_to_uniform(symspace::BornDist(std::vector<double>(probs, probs + len)));
  });
}

symspace_status symspace_sq_value(const symspace_matrix* v, const double* phi, size_t len,
                                  double* out) {
  SYMSPACE_REQUIRE(v != nullptr && phi != nullptr && out != nullptr);
  return guarded([&] {
    *out = symspace::sq_value(v->m, symspace::DiagObservable(std::vector<double>(phi, phi + len)));
  });
}

symspace_status symspace_expected_tvd(symspace_ensemble family, int dim, double* out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] { *out = symspace::expected_tvd(symspace::EnsembleId(to_cpp(family), dim)); });
}

symspace_status symspace_per_entry_deviation(symspace_ensemble family, int dim,
                                             symspace_entry_slot slot, double* out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] {
    symspace::EntrySlot s;
    switch (slot) {
      case SYMSPACE_SLOT_DIAGONAL: s = symspace::EntrySlot::Diagonal; break;
      case SYMSPACE_SLOT_PARTNER: s = symspace::EntrySlot::Partner; break;
      case SYMSPACE_SLOT_GENERIC: s = symspace::EntrySlot::Generic; break;
      default: throw symspace::DomainError("unknown entry slot");
    }
    *out = symspace::per_entry_deviation(symspace::EnsembleId(to_cpp(family), dim), s);
  });
}

symspace_status symspace_asymptote(symspace_ensemble family, double* out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] { *out = symspace::asymptote(to_cpp(family)); });
}

symspace_status symspace_appendix_interval(symspace_ensemble family, int dim,
                                           symspace_interval* out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto f = to_cpp(family);
    const auto b = symspace::appendix_interval(symspace::EnsembleId(f, dim));
    *out = {b.lower, b.upper, symspace::interval_is_proven(f) ? 1 : 0};
  });
}

symspace_status symspace_twirl_closed_form(symspace_ensemble family, const symspace_matrix* a,
                                           symspace_matrix** out) {
  SYMSPACE_REQUIRE(a != nullptr && out != nullptr);
  return guarded([&] {
    const symspace::EnsembleId e(to_cpp(family), static_cast<int>(a->m.rows()));
    *out = wrap(symspace::twirl_closed_form(e, a->m));
  });
}

symspace_status symspace_mc_expected_tvd(const symspace_ensemble_spec* spec,
                                         const symspace_mc_options* opts,
                                         symspace_mc_report* out) {
  SYMSPACE_REQUIRE(spec != nullptr && opts != nullptr && out != nullptr);
  return guarded(
      [&] { write_report(symspace::mc_expected_tvd(to_cpp(*spec), to_cpp(*opts)), out); });
}

symspace_status symspace_mc_twirl(symspace_ensemble family, const symspace_matrix* a,
                                  const symspace_mc_options* opts, symspace_matrix** mean_out,
                                  symspace_twirl_report* out) {
  SYMSPACE_REQUIRE(a != nullptr && opts != nullptr && out != nullptr);
  return guarded([&] {
    const symspace::EnsembleId e(to_cpp(family), static_cast<int>(a->m.rows()));
    auto r = symspace::mc_twirl(e, a->m, to_cpp(*opts));
    *out = {r.frobenius_error, a->m.norm(), r.trials, r.master_seed, r.wall_time_s};
    if (mean_out != nullptr) *mean_out = wrap(std::move(r.mean));
  });
}

symspace_status symspace_ks_law_check(symspace_ensemble family, symspace_entry_class entry,
                                      int dim, const symspace_mc_options* opts, double alpha,
                                      symspace_ks_result* out) {
  SYMSPACE_REQUIRE(opts != nullptr && out != nullptr);
  return guarded([&] {
    if (static_cast<int>(entry) < SYMSPACE_ENTRY_GROUP ||
        static_cast<int>(entry) > SYMSPACE_ENTRY_DIII_PARTNER) {
      throw symspace::DomainError("unknown entry class");
    }
    const symspace::LawSpec spec(to_cpp(family), static_cast<symspace::EntryClass>(entry), dim);
    const auto r = symspace::ks_law_check(spec, to_cpp(*opts), alpha);
    *out = {};
    out->statistic = r.statistic;
    out->threshold = r.threshold;
    out->pass = r.pass ? 1 : 0;
    out->degenerate = r.degenerate ? 1 : 0;
    out->trials = r.trials;
    out->master_seed = r.master_seed;
    const std::string law = spec.describe();
    std::strncpy(out->law, law.c_str(), sizeof(out->law) - 1);
  });
}

symspace_status symspace_levy_bound(symspace_ensemble family, double dim, double t, double* out) {
  SYMSPACE_REQUIRE(out != nullptr);
  return guarded([&] { *out = symspace::levy_bound(to_cpp(family), dim, t); });
}

symspace_status symspace_mc_tail_probability(const symspace_ensemble_spec* spec, const double* ts,
                                             size_t count, const symspace_mc_options* opts,
                                             symspace_tail_report* out) {
  SYMSPACE_REQUIRE(spec != nullptr && ts != nullptr && opts != nullptr && out != nullptr);
  return guarded([&] {
    const auto rows =
        symspace::mc_tail_probability(to_cpp(*spec), std::span(ts, count), to_cpp(*opts));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out[i] = {r.t, r.empirical, r.levy_bound, r.binomial_stderr, r.mean, r.trials};
    }
  });
}

symspace_status symspace_mc_ball_fraction(const symspace_ensemble_spec* spec, double radius,
                                          const symspace_mc_options* opts,
                                          symspace_mc_report* out) {
  SYMSPACE_REQUIRE(spec != nullptr && opts != nullptr && out != nullptr);
  return guarded([&] {
    write_report(symspace::mc_ball_fraction(to_cpp(*spec), radius, to_cpp(*opts)), out);
  });
}

symspace_status symspace_mc_query_deviation(const symspace_ensemble_spec* spec, const double* phi,
                                            size_t len, double tau,
                                            const symspace_mc_options* opts,
                                            symspace_mc_report* out) {
  SYMSPACE_REQUIRE(spec != nullptr && phi != nullptr && opts != nullptr && out != nullptr);
  return guarded([&] {
    const symspace::DiagObservable obs(std::vector<double>(phi, phi + len));
    write_report(symspace::mc_query_deviation(to_cpp(*spec), obs, tau, to_cpp(*opts)), out);
  });
}

symspace_status symspace_sq_bound(const symspace_sq_params* params, symspace_bound_result* out) {
  SYMSPACE_REQUIRE(params != nullptr && out != nullptr);
  return guarded([&] {
    const symspace::SqParams p{to_cpp(params->family), params->dim,      params->tau,
                               params->eps,             params->log_beta, to_cpp(params->mode)};
    const auto r = symspace::evaluate_bound(p);
    *out = {r.log_q_plus_1, r.log_ratio, r.u_bound,
            r.f_bound,      r.log_u,     r.log_f,
            r.xi,           symspace::tau_min(p.family, p.dim, p.mode),
            r.vacuous ? 1 : 0,  r.xi_positive ? 1 : 0};
  });
}

symspace_status symspace_regime_table(symspace_ensemble family, const int* n_list, size_t count,
                                      const symspace_regime_schedule* schedule,
                                      symspace_regime_row* rows) {
  SYMSPACE_REQUIRE(n_list != nullptr && schedule != nullptr && rows != nullptr);
  return guarded([&] {
    const symspace::RegimeSchedule s{schedule->tau_exp, schedule->beta_exp, schedule->xi_exp,
                                     to_cpp(schedule->mode)};
    const auto table = symspace::regime_table(to_cpp(family), std::span(n_list, count), s);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& r = table[i];
      rows[i] = {r.n,     r.dim,   r.tau,          r.eps,
                 r.xi,    r.log_beta, r.log_u,     r.log_f,
                 r.log_q_plus_1, r.log_log_q_plus_1, r.vacuous ? 1 : 0, r.valid ? 1 : 0};
    }
  });
}

}  // extern "C"
