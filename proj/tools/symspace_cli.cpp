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

// symspace_cli: command-line front end over the symspace C API.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symspace/symspace.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheckFailed = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ApiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(symspace_status s) {
  if (s != SYMSPACE_OK) throw ApiError(symspace_last_error());
}

struct MatrixDeleter {
  void operator()(symspace_matrix* m) const { symspace_matrix_destroy(m); }
};
using MatrixPtr = std::unique_ptr<symspace_matrix, MatrixDeleter>;

// ---------------------------------------------------------------------------
// Configuration shared by all subcommands.

struct RunConfig {
  std::string ensemble = "unitary";
  std::optional<int> dim;
  std::optional<int> qubits;
  int split_p = 0;
  int split_q = 0;
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::optional<double> tau;
  std::optional<double> eps;
  std::optional<double> beta;
  std::optional<double> log_beta;
  std::string mode = "per-ensemble";
  std::string format = "json";
  std::string out;
  bool timing = false;

  // subcommand specific
  std::uint64_t index = 0;
  std::uint64_t count = 1;
  std::string entry;
  double alpha = 1e-3;
  std::vector<double> ts{0.05, 0.1, 0.2, 0.4};
  double radius = 0.0;
  std::string op = "random";
  double tolerance = 6.0;
  bool check = false;
  double check_sigmas = 4.0;
  std::vector<int> n_list{24, 32, 40};
  double tau_exp = 0.25;
  double beta_exp = 0.49;
  double xi_exp = 0.25;
  std::vector<std::string> families{"ai", "aii", "diii"};
  int d_min = 4;
  int d_max = 1024;
  int d_step = 2;
};

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("SYMSPACE_SEED"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end) throw UsageError("SYMSPACE_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

symspace_ensemble resolve_family(const std::string& name) {
  symspace_ensemble e{};
  if (symspace_parse_ensemble(name.c_str(), &e) != SYMSPACE_OK) {
    throw UsageError("unknown ensemble '" + name + "'");
  }
  return e;
}

int resolve_dim(const RunConfig& c) {
  if (c.dim && c.qubits) throw UsageError("--dim and --qubits are mutually exclusive");
  if (c.qubits) {
    if (*c.qubits < 1 || *c.qubits > 30) throw UsageError("--qubits must lie in [1, 30]");
    return 1 << *c.qubits;
  }
  if (!c.dim) throw UsageError("--dim or --qubits is required");
  return *c.dim;
}

symspace_ensemble_spec resolve_spec(const RunConfig& c) {
  symspace_ensemble_spec s{resolve_family(c.ensemble), resolve_dim(c), c.split_p, c.split_q};
  check(symspace_validate_spec(&s));
  return s;
}

symspace_mc_options resolve_mc(const RunConfig& c) {
  if (c.workers < 1) throw UsageError("--workers must be positive");
  return {c.trials, resolve_seed(c), c.workers};
}

symspace_sq_mode resolve_mode(const std::string& m) {
  if (m == "combined") return SYMSPACE_SQ_COMBINED;
  if (m == "per-ensemble") return SYMSPACE_SQ_PER_ENSEMBLE;
  throw UsageError("--mode must be 'combined' or 'per-ensemble'");
}

// ---------------------------------------------------------------------------
// Output.

struct Result {
  Json body = Json::object();
  std::vector<Json> csv_rows;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  double wall_time_s = 0.0;
  int exit_code = kExitOk;
};

std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const std::vector<Json>& rows) {
  std::ostringstream out;
  if (rows.empty()) return {};
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Json scalars_of(const Json& body) {
  Json row = Json::object();
  for (const auto& [key, value] : body.items()) {
    if (!value.is_structured()) row[key] = value;
  }
  return row;
}

std::string render(const Result& r, const RunConfig& c) {
  if (c.format == "csv") {
    return render_csv(r.csv_rows.empty() ? std::vector<Json>{scalars_of(r.body)} : r.csv_rows);
  }
  Json doc = r.body;
  Json meta = Json::object();
  meta["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  meta["trials"] = r.trials ? Json(*r.trials) : Json(nullptr);
  meta["version"] = symspace_version();
  if (c.timing) meta["wall_time_s"] = r.wall_time_s;
  doc["meta"] = meta;
  return doc.dump(2) + "\n";
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json matrix_json(const symspace_matrix* m) {
  const int d = symspace_matrix_dim(m);
  std::vector<double> flat(2 * static_cast<std::size_t>(d) * d);
  check(symspace_matrix_copy_out(m, flat.data(), flat.size()));
  Json rows = Json::array();
  for (int r = 0; r < d; ++r) {
    Json row = Json::array();
    for (int c = 0; c < d; ++c) {
      const std::size_t k = 2 * (static_cast<std::size_t>(r) * d + c);
      row.push_back(Json::array({flat[k], flat[k + 1]}));
    }
    rows.push_back(row);
  }
  return rows;
}

bool is_power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

std::string outcome_label(int x, int d) {
  if (!is_power_of_two(d)) return std::to_string(x);
  int bits = 0;
  while ((1 << bits) < d) ++bits;
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int b = 0; b < bits; ++b) {
    if ((x >> (bits - 1 - b)) & 1) s[static_cast<std::size_t>(b)] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subcommands.

Result cmd_sample(const RunConfig& c) {
  const auto spec = resolve_spec(c);
  const std::uint64_t seed = resolve_seed(c);
  if (c.count < 1) throw UsageError("--count must be positive");
  Result r;
  r.seed = seed;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = spec.dim;
  Json samples = Json::array();
  for (std::uint64_t k = 0; k < c.count; ++k) {
    const std::uint64_t index = c.index + k;
    symspace_matrix* raw = nullptr;
    check(symspace_sample(&spec, seed, index, &raw));
    MatrixPtr v(raw);
    std::vector<double> probs(static_cast<std::size_t>(spec.dim));
    check(symspace_born_distribution(v.get(), 0, probs.data(), probs.size()));
    double tvd = 0.0;
    check(symspace_tvd_to_uniform(probs.data(), probs.size(), &tvd));
    Json born = Json::array();
    for (int x = 0; x < spec.dim; ++x) {
      const auto p = probs[static_cast<std::size_t>(x)];
      born.push_back(Json{{"outcome", outcome_label(x, spec.dim)}, {"probability", p}});
      r.csv_rows.push_back(Json{{"index", index},
                                {"outcome", outcome_label(x, spec.dim)},
                                {"probability", p},
                                {"tvd_to_uniform", tvd}});
    }
    samples.push_back(Json{{"index", index},
                           {"matrix", matrix_json(v.get())},
                           {"born_distribution", born},
                           {"tvd_to_uniform", tvd}});
  }
  r.body["samples"] = samples;
  return r;
}

Result cmd_expected_tvd(const RunConfig& c) {
  const auto family = resolve_family(c.ensemble);
  const int d = resolve_dim(c);
  Result r;
  double v = 0.0;
  double limit = 0.0;
  check(symspace_expected_tvd(family, d, &v));
  check(symspace_asymptote(family, &limit));
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = d;
  r.body["expected_tvd"] = v;
  r.body["asymptote"] = limit;
  double generic = 0.0;
  check(symspace_per_entry_deviation(family, d, SYMSPACE_SLOT_GENERIC, &generic));
  r.body["generic_entry_deviation"] = generic;
  double special = 0.0;
  if (symspace_per_entry_deviation(family, d, SYMSPACE_SLOT_DIAGONAL, &special) == SYMSPACE_OK) {
    r.body["diagonal_entry_deviation"] = special;
  } else if (symspace_per_entry_deviation(family, d, SYMSPACE_SLOT_PARTNER, &special) ==
             SYMSPACE_OK) {
    r.body["partner_entry_deviation"] = special;
  }
  return r;
}

Result cmd_mc_tvd(const RunConfig& c) {
  const auto spec = resolve_spec(c);
  const auto opts = resolve_mc(c);
  symspace_mc_report rep{};
  check(symspace_mc_expected_tvd(&spec, &opts, &rep));
  Result r;
  r.seed = opts.seed;
  r.trials = rep.trials;
  r.wall_time_s = rep.wall_time_s;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = spec.dim;
  r.body["estimate"] = rep.estimate;
  r.body["std_error"] = rep.std_error;
  double exact = 0.0;
  if (symspace_expected_tvd(spec.family, spec.dim, &exact) == SYMSPACE_OK) {
    const double z = rep.std_error > 0 ? (rep.estimate - exact) / rep.std_error : 0.0;
    r.body["closed_form"] = exact;
    r.body["z_score"] = z;
    if (c.check) {
      const bool pass = std::abs(z) <= c.check_sigmas;
      r.body["pass"] = pass;
      if (!pass) r.exit_code = kExitCheckFailed;
    }
  } else {
    r.body["closed_form"] = nullptr;
    r.body["z_score"] = nullptr;
  }
  return r;
}

MatrixPtr make_operator(const std::string& kind, int d, std::uint64_t seed) {
  symspace_matrix* raw = nullptr;
  if (kind == "random") {
    check(symspace_random_hermitian(d, seed, UINT64_MAX, &raw));
    return MatrixPtr(raw);
  }
  std::vector<double> flat(2 * static_cast<std::size_t>(d) * d, 0.0);
  if (kind == "identity") {
    for (int i = 0; i < d; ++i) flat[2 * (static_cast<std::size_t>(i) * d + i)] = 1.0;
  } else if (kind == "projector") {
    flat[0] = 1.0;
  } else {
    throw UsageError("--operator must be 'random', 'identity' or 'projector'");
  }
  check(symspace_matrix_create(d, flat.data(), &raw));
  return MatrixPtr(raw);
}

Result cmd_twirl_check(const RunConfig& c) {
  const auto family = resolve_family(c.ensemble);
  const int d = resolve_dim(c);
  const auto opts = resolve_mc(c);
  const MatrixPtr a = make_operator(c.op, d, opts.seed);
  symspace_twirl_report rep{};
  check(symspace_mc_twirl(family, a.get(), &opts, nullptr, &rep));
  const double bound = c.tolerance / std::sqrt(static_cast<double>(rep.trials)) * rep.operator_norm_f;
  const bool pass = rep.frobenius_error <= bound;
  Result r;
  r.seed = opts.seed;
  r.trials = rep.trials;
  r.wall_time_s = rep.wall_time_s;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = d;
  r.body["operator"] = c.op;
  r.body["operator_norm_f"] = rep.operator_norm_f;
  r.body["frobenius_error"] = rep.frobenius_error;
  r.body["tolerance"] = bound;
  r.body["pass"] = pass;
  if (!pass) r.exit_code = kExitCheckFailed;
  return r;
}

symspace_entry_class resolve_entry(const std::string& entry, symspace_ensemble f) {
  if (entry == "group") return SYMSPACE_ENTRY_GROUP;
  if (entry == "dot-product") return SYMSPACE_ENTRY_DOT_PRODUCT;
  if (entry == "diagonal") return SYMSPACE_ENTRY_AI_DIAGONAL;
  if (entry == "generic") return f == SYMSPACE_DIII ? SYMSPACE_ENTRY_DIII_GENERIC
                                                    : SYMSPACE_ENTRY_AII_GENERIC;
  if (entry == "partner") return f == SYMSPACE_DIII ? SYMSPACE_ENTRY_DIII_PARTNER
                                                    : SYMSPACE_ENTRY_AII_PARTNER;
  throw UsageError("--entry must be one of group, dot-product, diagonal, generic, partner");
}

Result cmd_law_check(const RunConfig& c) {
  const auto family = resolve_family(c.ensemble);
  const int d = resolve_dim(c);
  const auto opts = resolve_mc(c);
  if (c.entry.empty()) throw UsageError("--entry is required");
  symspace_ks_result ks{};
  check(symspace_ks_law_check(family, resolve_entry(c.entry, family), d, &opts, c.alpha, &ks));
  Result r;
  r.seed = opts.seed;
  r.trials = ks.trials;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = d;
  r.body["entry"] = c.entry;
  r.body["law"] = ks.law;
  r.body["degenerate"] = ks.degenerate != 0;
  r.body["statistic"] = ks.statistic;
  r.body["threshold"] = ks.threshold;
  r.body["pass"] = ks.pass != 0;
  if (!ks.pass) r.exit_code = kExitCheckFailed;
  return r;
}

Result cmd_concentration(const RunConfig& c) {
  const auto spec = resolve_spec(c);
  const auto opts = resolve_mc(c);
  if (c.ts.empty()) throw UsageError("--t needs at least one value");
  std::vector<symspace_tail_report> rows(c.ts.size());
  check(symspace_mc_tail_probability(&spec, c.ts.data(), c.ts.size(), &opts, rows.data()));
  Result r;
  r.seed = opts.seed;
  r.trials = opts.trials;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = spec.dim;
  r.body["mean"] = rows.front().mean;
  bool all_pass = true;
  Json table = Json::array();
  for (const auto& t : rows) {
    const bool pass = t.empirical <= t.levy_bound + 3.0 * t.binomial_stderr;
    all_pass = all_pass && pass;
    Json row{{"t", t.t},
             {"empirical", t.empirical},
             {"levy_bound", t.levy_bound},
             {"binomial_stderr", t.binomial_stderr},
             {"pass", pass}};
    table.push_back(row);
    r.csv_rows.push_back(row);
  }
  r.body["rows"] = table;
  r.body["pass"] = all_pass;
  if (!all_pass) r.exit_code = kExitCheckFailed;
  return r;
}

Result cmd_ball_fraction(const RunConfig& c) {
  const auto spec = resolve_spec(c);
  const auto opts = resolve_mc(c);
  symspace_mc_report rep{};
  check(symspace_mc_ball_fraction(&spec, c.radius, &opts, &rep));
  Result r;
  r.seed = opts.seed;
  r.trials = rep.trials;
  r.wall_time_s = rep.wall_time_s;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = spec.dim;
  r.body["radius"] = c.radius;
  r.body["estimate"] = rep.estimate;
  r.body["std_error"] = rep.std_error;
  return r;
}

double resolve_log_beta(const RunConfig& c) {
  if (c.beta && c.log_beta) throw UsageError("--beta and --log-beta are mutually exclusive");
  if (c.log_beta) return *c.log_beta;
  if (!c.beta) throw UsageError("--beta or --log-beta is required");
  if (!(*c.beta > 0.0 && *c.beta <= 1.0)) throw UsageError("--beta must lie in (0, 1]");
  return std::log(*c.beta);
}

Result cmd_sq_bound(const RunConfig& c) {
  const auto family = resolve_family(c.ensemble);
  double d = 0.0;
  if (c.dim && c.qubits) throw UsageError("--dim and --qubits are mutually exclusive");
  if (c.qubits) {
    if (*c.qubits < 2 || *c.qubits > 1000) throw UsageError("--qubits must lie in [2, 1000]");
    d = std::ldexp(1.0, *c.qubits);
  } else if (c.dim) {
    d = *c.dim;
  } else {
    throw UsageError("--dim or --qubits is required");
  }
  if (!c.tau || !c.eps) throw UsageError("--tau and --eps are required");
  const symspace_sq_params p{family, d, *c.tau, *c.eps, resolve_log_beta(c), resolve_mode(c.mode)};
  symspace_bound_result b{};
  check(symspace_sq_bound(&p, &b));
  Result r;
  r.body["ensemble"] = c.ensemble;
  r.body["dim"] = d < 9007199254740992.0 ? Json(static_cast<std::uint64_t>(d)) : Json(d);
  r.body["tau"] = p.tau;
  r.body["eps"] = p.eps;
  r.body["log_beta"] = p.log_beta;
  r.body["mode"] = c.mode;
  r.body["xi"] = b.xi;
  r.body["tau_min"] = b.tau_min;
  r.body["u_bound"] = b.u_bound;
  r.body["f_bound"] = b.f_bound;
  r.body["log_u"] = b.log_u;
  r.body["log_f"] = b.log_f;
  r.body["log_ratio"] = number_or_null(b.log_ratio);
  r.body["log_q_plus_1"] = b.log_q_plus_1;
  r.body["log10_q_plus_1"] = b.log_q_plus_1 / std::log(10.0);
  r.body["vacuous"] = b.vacuous != 0;
  r.body["xi_positive"] = b.xi_positive != 0;
  return r;
}

Result cmd_regime_table(const RunConfig& c) {
  const auto family = resolve_family(c.ensemble);
  if (c.n_list.empty()) throw UsageError("--n needs at least one value");
  const symspace_regime_schedule s{c.tau_exp, c.beta_exp, c.xi_exp, resolve_mode(c.mode)};
  std::vector<symspace_regime_row> rows(c.n_list.size());
  check(symspace_regime_table(family, c.n_list.data(), c.n_list.size(), &s, rows.data()));
  Result r;
  r.body["ensemble"] = c.ensemble;
  r.body["mode"] = c.mode;
  r.body["tau_exp"] = c.tau_exp;
  r.body["beta_exp"] = c.beta_exp;
  r.body["xi_exp"] = c.xi_exp;
  Json table = Json::array();
  for (const auto& row : rows) {
    Json j{{"n", row.n},
           {"dim", row.dim < 9007199254740992.0 ? Json(static_cast<std::uint64_t>(row.dim))
                                                : Json(row.dim)},
           {"tau", row.tau},
           {"eps", row.eps},
           {"xi", row.xi},
           {"log_beta", row.log_beta},
           {"log_u", row.log_u},
           {"log_f", row.log_f},
           {"log_q_plus_1", row.log_q_plus_1},
           {"log_log_q_plus_1", number_or_null(row.log_log_q_plus_1)},
           {"vacuous", row.vacuous != 0},
           {"valid", row.valid != 0}};
    table.push_back(j);
    r.csv_rows.push_back(j);
  }
  r.body["rows"] = table;
  return r;
}

Result cmd_bounds_table(const RunConfig& c) {
  if (c.d_min < 4 || c.d_max < c.d_min || c.d_step < 1) {
    throw UsageError("need 4 <= --d-min <= --d-max and --d-step >= 1");
  }
  Result r;
  Json table = Json::array();
  bool all_pass = true;
  for (const auto& name : c.families) {
    const auto family = resolve_family(name);
    for (int d = c.d_min; d <= c.d_max; d += c.d_step) {
      double v = 0.0;
      symspace_interval iv{};
      if (symspace_expected_tvd(family, d, &v) != SYMSPACE_OK) continue;  // e.g. odd d for aii
      check(symspace_appendix_interval(family, d, &iv));
      const bool inside = iv.lower <= v && v <= iv.upper;
      if (iv.proven) all_pass = all_pass && inside;
      Json row{{"ensemble", name},    {"dim", d},
               {"expected_tvd", v},   {"lower", iv.lower},
               {"upper", iv.upper},   {"contains", inside},
               {"proven", iv.proven != 0}};
      table.push_back(row);
      r.csv_rows.push_back(row);
    }
  }
  r.body["rows"] = table;
  r.body["pass"] = all_pass;
  if (!all_pass) r.exit_code = kExitCheckFailed;
  return r;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& c, bool with_mc) {
  sub->add_option("--ensemble", c.ensemble,
                  "unitary, orthogonal, symplectic, ai, aii, aiii, bdi, diii, ci or cii");
  sub->add_option("--dim", c.dim, "Hilbert-space dimension d");
  sub->add_option("--qubits", c.qubits, "number of qubits n (d = 2^n)");
  sub->add_option("--split-p", c.split_p, "block size p for aiii, bdi and cii");
  sub->add_option("--split-q", c.split_q, "block size q for aiii, bdi and cii");
  sub->add_option("--seed", c.seed, "master seed (default: $SYMSPACE_SEED or 0)");
  sub->add_option("--workers", c.workers, "worker threads");
  if (with_mc) sub->add_option("--trials", c.trials, "number of Monte Carlo trials");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "output path (default: stdout)");
  sub->add_flag("--timing", c.timing, "include wall-clock time in the JSON meta object");
}

int run(int argc, char** argv) {
  CLI::App app{"Born-distribution statistics of random unitary ensembles", "symspace_cli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", symspace_version());
  RunConfig c;
  std::map<CLI::App*, Result (*)(const RunConfig&)> handlers;

  auto* sample = app.add_subcommand("sample", "draw matrices and their Born distributions");
  add_common(sample, c, false);
  sample->add_option("--index", c.index, "first stream index");
  sample->add_option("--count", c.count, "number of matrices");
  handlers[sample] = cmd_sample;

  auto* etvd = app.add_subcommand("expected-tvd", "closed-form expected distance to uniform");
  add_common(etvd, c, false);
  handlers[etvd] = cmd_expected_tvd;

  auto* mctvd = app.add_subcommand("mc-tvd", "Monte Carlo expected distance to uniform");
  add_common(mctvd, c, true);
  mctvd->add_flag("--check", c.check, "exit 2 if the estimate misses the closed form");
  mctvd->add_option("--sigmas", c.check_sigmas, "standard errors allowed by --check");
  handlers[mctvd] = cmd_mc_tvd;

  auto* twirl = app.add_subcommand("twirl-check", "empirical twirl against its closed form");
  add_common(twirl, c, true);
  twirl->add_option("--operator", c.op, "random, identity or projector");
  twirl->add_option("--tolerance", c.tolerance, "error allowed in units of ||A||_F / sqrt(trials)");
  handlers[twirl] = cmd_twirl_check;

  auto* law = app.add_subcommand("law-check", "Kolmogorov-Smirnov test of an entry law");
  add_common(law, c, true);
  law->add_option("--entry", c.entry, "group, dot-product, diagonal, generic or partner");
  law->add_option("--alpha", c.alpha, "significance level");
  handlers[law] = cmd_law_check;

  auto* conc = app.add_subcommand("concentration", "empirical tails against Levy bounds");
  add_common(conc, c, true);
  conc->add_option("--t", c.ts, "deviation thresholds")->delimiter(',');
  handlers[conc] = cmd_concentration;

  auto* ball = app.add_subcommand("ball-fraction", "mass of the ball around uniform");
  add_common(ball, c, true);
  ball->add_option("--radius", c.radius, "ball radius in total variation distance");
  handlers[ball] = cmd_ball_fraction;

  auto* sq = app.add_subcommand("sq-bound", "statistical-query lower bound on queries");
  add_common(sq, c, false);
  sq->add_option("--tau", c.tau, "oracle tolerance");
  sq->add_option("--eps", c.eps, "learning accuracy");
  sq->add_option("--beta", c.beta, "success fraction");
  sq->add_option("--log-beta", c.log_beta, "natural log of the success fraction");
  sq->add_option("--mode", c.mode, "combined or per-ensemble");
  handlers[sq] = cmd_sq_bound;

  auto* regime = app.add_subcommand("regime-table", "query bounds along a qubit schedule");
  add_common(regime, c, false);
  regime->add_option("--n", c.n_list, "qubit counts")->delimiter(',');
  regime->add_option("--tau-exp", c.tau_exp, "tau = 2^(-tau_exp n)");
  regime->add_option("--beta-exp", c.beta_exp, "beta = exp(-2^(beta_exp n))");
  regime->add_option("--xi-exp", c.xi_exp, "xi = 2^(-xi_exp n)");
  regime->add_option("--mode", c.mode, "combined or per-ensemble");
  handlers[regime] = cmd_regime_table;

  auto* bounds = app.add_subcommand("bounds-table", "expected distance against its interval");
  add_common(bounds, c, false);
  bounds->add_option("--ensembles", c.families, "families to sweep")->delimiter(',');
  bounds->add_option("--d-min", c.d_min, "smallest dimension");
  bounds->add_option("--d-max", c.d_max, "largest dimension");
  bounds->add_option("--d-step", c.d_step, "dimension step");
  handlers[bounds] = cmd_bounds_table;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << symspace_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == regime && chosen->count("--ensemble") == 0) c.ensemble = "aii";
  try {
    if (c.workers < 1) throw UsageError("--workers must be positive");
    const Result r = handlers.at(chosen)(c);
    const std::string text = render(r, c);
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw UsageError("cannot open output file '" + c.out + "'");
      f << text;
      if (!f) throw UsageError("failed writing '" + c.out + "'");
    }
    return r.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitInvalid;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
