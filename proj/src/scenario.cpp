// Copyright 2026 The ehtp Authors
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

#include "scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "error.hpp"
#include "gamma.hpp"
#include "instances.hpp"
#include "serialize.hpp"
#include "varopoulos.hpp"

namespace ehtp {
namespace {

struct Assertion {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tol = 0.0;
  json extra = json::object();
};

struct Outcome {
  std::size_t index = 0;
  std::string id;
  std::string experiment;
  std::string identity;
  int status = kExitOk;
  std::string error;
  std::vector<Assertion> assertions;
  json details = json::object();
  std::vector<std::pair<std::string, std::string>> csv_blocks;
};

struct Scenario {
  std::string id;
  std::string experiment;
  GroupPtr group;
  std::optional<Representation> rep;
  std::vector<Measure> measures;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  json params = json::object();
  bool quick = false;
};

const std::vector<std::pair<std::string, std::string>>& experiments() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"gamma-homomorphism",
       "Gamma_pi(mu*nu) = Gamma_pi(mu) o Gamma_pi(nu) and ||Gamma_pi(mu)||_cb <= ||mu||"},
      {"schur-identity",
       "Gamma_pi(mu) multiplies V E_jk V^* by mu^(chi_j chi_k^-1)"},
      {"kernel-equivalence",
       "Gamma_pi(mu) = 0 <=> mu^ = 0 on E_pi E_pi^-1 <=> (pi (x) conj pi)_1(mu) = 0"},
      {"cp-posdef-equivalence",
       "Gamma_pi(mu) completely positive <=> (sigma, tau) -> mu^(sigma tau^-1) positive definite on E_pi"},
      {"square-example",
       "symbol of Gamma_pi(chi_k) for pi = (z^(n^2))_n is the indicator of m^2 - n^2 = k"},
      {"restriction-check", "E_(pi|H) = r(E_pi) for the restriction map r of a subgroup H"},
      {"norm-interval", "cb-norm interval of Gamma_pi(mu) against ||mu||"},
  };
  return table;
}

int param_int(const Scenario& sc, const char* key, int fallback) {
  if (!sc.params.contains(key)) return fallback;
  const auto& v = sc.params.at(key);
  if (!v.is_number_integer()) fail(ErrorCode::kSchema, std::string("param ") + key + " must be an integer");
  return v.get<int>();
}

int scaled(const Scenario& sc, int count) {
  return sc.quick ? std::max(1, count / 4) : count;
}

const Representation& require_rep(const Scenario& sc) {
  if (!sc.rep) fail(ErrorCode::kSchema, "experiment " + sc.experiment + " needs a representation");
  return *sc.rep;
}

// Mixture of measure shapes so both kernel and CP verdicts occur.
Measure mixed_measure(Rng& rng, const GroupPtr& g, int k) {
  switch (k % 4) {
    case 0: return random_measure(rng, g);
    case 1: return random_positive_measure(rng, g);
    case 2: {
      const Measure nu = random_sparse_measure(rng, g);
      return convolve(nu, reverse_conj(nu));
    }
    default: return random_sparse_measure(rng, g);
  }
}

std::vector<Measure> measures_with_random(const Scenario& sc, Rng& rng, int default_random) {
  std::vector<Measure> out = sc.measures;
  const int extra = scaled(sc, param_int(sc, "random_measures", sc.measures.empty() ? default_random : 0));
  for (int k = 0; k < extra; ++k) out.push_back(mixed_measure(rng, sc.group, k));
  return out;
}

void add(Outcome& o, std::string name, bool passed, double value, double tol, json extra = json::object()) {
  o.assertions.push_back(Assertion{std::move(name), passed, value, tol, std::move(extra)});
}

std::string indexed(const char* name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

NormOptions norm_options(const Scenario& sc, int default_restarts) {
  NormOptions opt;
  opt.max_iters = param_int(sc, "max_iters", 500);
  opt.restarts = scaled(sc, param_int(sc, "restarts", default_restarts));
  opt.seed = derive_seed(sc.seed, "norm");
  return opt;
}

// The zero measure maps to the empty term list, whose norm is 0.
NormInterval cb_bounds(const ElementaryOperator& op, const NormOptions& opt) {
  if (op.terms().empty()) return NormInterval{};
  return haagerup_norm_bounds(op, opt);
}

void run_gamma_homomorphism(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  Rng rng(sc.seed, "gamma-homomorphism");
  auto ms = measures_with_random(sc, rng, 6);
  const std::size_t n = ms.size();
  std::optional<DiagonalizedRep> diag;
  if (sc.group->has_cyclic_presentation()) diag = diagonalize(pi, derive_seed(sc.seed, "diagonalize"));
  std::vector<double> resid(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (n > 8 && j != (i + 1) % n) continue;
      const double r = homomorphism_residual(pi, ms[i], ms[j]);
      if (j == (i + 1) % n) resid[i] = r;
      add(o, "homomorphism[" + std::to_string(i) + "," + std::to_string(j) + "]", r <= sc.tol, r, sc.tol);
    }
  }
  const auto opt = norm_options(sc, 4);
  json reports = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const auto interval = cb_bounds(gamma(pi, ms[i]).op, opt);
    const double norm = ms[i].norm();
    add(o, indexed("contractive", i), interval.upper <= norm + sc.tol, interval.upper - norm, sc.tol);
    json kernel = {{"diffset", nullptr}, {"tensorconj", kernel_test_tensor_conjugate(pi, ms[i])}};
    if (diag) kernel["diffset"] = kernel_test_difference_set(*diag, ms[i]);
    reports.push_back({{"homomorphism_resid", resid[i]},
                       {"cb_upper", interval.upper},
                       {"mu_norm", norm},
                       {"in_augmentation_ideal", in_augmentation_ideal(ms[i])},
                       {"kernel", kernel}});
  }
  o.details["gamma"] = reports;
}

void run_schur_identity(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  const auto diag = diagonalize(pi, derive_seed(sc.seed, "diagonalize"));
  Rng rng(sc.seed, "schur-identity");
  auto ms = measures_with_random(sc, rng, 6);
  json spectrum = json::array();
  for (const auto& c : diag.spectrum.characters()) spectrum.push_back(c.exponents);
  o.details["spectrum"] = spectrum;
  o.details["reconstruction_residual"] = diag.reconstruction_residual;
  json symbols = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto form = schur_form(diag, ms[i], false);
    const double tol = sc.tol * std::max(1.0, ms[i].norm());
    add(o, indexed("schur", i), form.residual <= tol, form.residual, tol);
    bool gelfand_ok = true;
    try {
      gelfand(diag, ms[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kVerificationFailure) throw;
      gelfand_ok = false;
    }
    add(o, indexed("gelfand", i), gelfand_ok, gelfand_ok ? 0.0 : 1.0, 0.0);
    const auto u = from_measure(diag, ms[i]);
    symbols.push_back(to_json(u));
    o.csv_blocks.emplace_back("symbol measure=" + std::to_string(i), symbol_csv(u));
  }
  o.details["symbols"] = symbols;
}

void run_kernel_equivalence(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  Rng rng(sc.seed, "kernel-equivalence");
  auto ms = measures_with_random(sc, rng, 10);
  std::optional<DiagonalizedRep> diag;
  if (sc.group->has_cyclic_presentation()) {
    diag = diagonalize(pi, derive_seed(sc.seed, "diagonalize"));
    const SpectrumSet dual = dual_group(sc.group);
    const SpectrumSet diffs = difference_set(diag->spectrum);
    const int adversarial = scaled(sc, param_int(sc, "adversarial", 5));
    for (int k = 0; k < adversarial; ++k) {
      std::vector<cplx> transform(dual.size());
      for (std::size_t c = 0; c < dual.size(); ++c) {
        if (!diffs.contains(dual[c])) transform[c] = rng.complex_gauss();
      }
      // Every other instance leaks one coefficient onto the difference set.
      if (k % 2 == 1) transform[dual.index_of(diffs[rng.integer(0, static_cast<int>(diffs.size()) - 1)])] = 1.0;
      ms.push_back(from_transform(sc.group, transform));
    }
  }
  int disagreements = 0;
  json verdicts = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const bool transfer = kernel_test_transfer(pi, ms[i]);
    const bool tensorconj = kernel_test_tensor_conjugate(pi, ms[i]);
    json v = {{"transfer", transfer}, {"tensorconj", tensorconj}, {"diffset", nullptr}};
    bool agree = transfer == tensorconj;
    if (diag) {
      const bool diffset = kernel_test_difference_set(*diag, ms[i]);
      v["diffset"] = diffset;
      agree = agree && diffset == transfer;
    }
    if (!agree) ++disagreements;
    add(o, indexed("agree", i), agree, agree ? 0.0 : 1.0, 0.0, v);
    verdicts.push_back(v);
  }
  o.details["verdicts"] = verdicts;
  o.details["disagreements"] = disagreements;
}

void run_cp_posdef(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  const auto diag = diagonalize(pi, derive_seed(sc.seed, "diagonalize"));
  Rng rng(sc.seed, "cp-posdef-equivalence");
  auto ms = measures_with_random(sc, rng, 8);
  const int trials = scaled(sc, param_int(sc, "trials", 16));
  json reports = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    try {
      const auto r = equivalence_suite(diag, ms[i], trials, derive_seed(sc.seed, "sampling"));
      json v = {{"completely_positive", r.completely_positive},
                {"positive_definite", r.positive_definite},
                {"sampled_positive", r.sampled_positive},
                {"kraus_count", r.kraus_count},
                {"in_augmentation_ideal", r.augmentation_ideal}};
      add(o, indexed("equivalence", i), true, 0.0, 0.0, v);
      reports.push_back(v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kVerificationFailure) throw;
      add(o, indexed("equivalence", i), false, 1.0, 0.0, {{"error", e.what()}});
      reports.push_back({{"error", e.what()}});
    }
    o.csv_blocks.emplace_back("symbol measure=" + std::to_string(i), symbol_csv(from_measure(diag, ms[i])));
  }
  o.details["reports"] = reports;
}

void run_square_example(const Scenario& sc, Outcome& o) {
  const int modulus = param_int(sc, "N", 101);
  if (modulus < 2) fail(ErrorCode::kSchema, "N must be at least 2");
  std::vector<int> indices;
  if (sc.params.contains("indices")) {
    for (const auto& v : sc.params.at("indices")) indices.push_back(v.get<int>());
  } else {
    for (int n = 1; n <= param_int(sc, "n_max", 6); ++n) indices.push_back(n);
  }
  std::vector<int> ks;
  if (sc.params.contains("ks")) {
    for (const auto& v : sc.params.at("ks")) ks.push_back(v.get<int>());
  } else {
    ks.push_back(param_int(sc, "k", 5));
  }
  auto g = FiniteGroup::cyclic_product({modulus});
  auto square = [&](int n) {
    return static_cast<int>(((static_cast<long long>(n) * n) % modulus + modulus) % modulus);
  };
  std::vector<Character> chars;
  std::set<int> seen;
  for (int n : indices) {
    if (!seen.insert(square(n)).second) {
      fail(ErrorCode::kSchema, "indices give repeated squares modulo N");
    }
    chars.push_back(Character{{square(n)}});
  }
  const auto pi = Representation::from_characters(g, chars);
  const auto diag = diagonalize(pi, derive_seed(sc.seed, "diagonalize"));
  // Basis index -> position in `indices`.
  std::vector<std::size_t> position(indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const int e = diag.char_of_index[j].exponents[0];
    for (std::size_t p = 0; p < indices.size(); ++p) {
      if (square(indices[p]) == e) position[j] = p;
    }
  }

  json per_k = json::array();
  for (int k : ks) {
    // Exhaustive pair scan first.
    std::set<std::pair<int, int>> oracle;
    for (int n : indices) {
      for (int m : indices) {
        if ((((static_cast<long long>(m) * m - static_cast<long long>(n) * n - k) % modulus) + modulus) % modulus == 0) {
          oracle.insert({n, m});
        }
      }
    }
    std::vector<cplx> density(modulus);
    for (int s = 0; s < modulus; ++s) density[s] = evaluate(*g, Character{{((k % modulus) + modulus) % modulus}}, s);
    const Measure mu = Measure::from_density(g, density);
    const auto form = schur_form(diag, mu, false);
    std::set<std::pair<int, int>> found;
    double value_err = 0.0;
    for (Eigen::Index j = 0; j < form.symbol.rows(); ++j) {
      for (Eigen::Index l = 0; l < form.symbol.cols(); ++l) {
        const int n = indices[position[j]], m = indices[position[l]];
        const cplx u = form.symbol(j, l);
        const double expect = oracle.count({n, m}) ? 1.0 : 0.0;
        value_err = std::max(value_err, std::abs(u - expect));
        if (std::abs(u) > 1e-10) found.insert({n, m});
      }
    }
    const std::string tag = "[k=" + std::to_string(k) + "]";
    json pairs = json::array(), oracle_pairs = json::array();
    for (const auto& [n, m] : found) pairs.push_back({n, m});
    for (const auto& [n, m] : oracle) oracle_pairs.push_back({n, m});
    add(o, "pairs" + tag, found == oracle, found == oracle ? 0.0 : 1.0, 0.0,
        {{"pairs", pairs}, {"oracle_pairs", oracle_pairs}});
    add(o, "values" + tag, value_err <= 1e-10, value_err, 1e-10);
    const double schur_tol = sc.tol * std::max(1.0, mu.norm());
    add(o, "schur" + tag, form.residual <= schur_tol, form.residual, schur_tol);
    per_k.push_back({{"k", k}, {"pairs", pairs}});
    o.csv_blocks.emplace_back("symbol k=" + std::to_string(k), symbol_csv(from_measure(diag, mu)));
  }
  o.details["N"] = modulus;
  o.details["indices"] = indices;
  o.details["solutions"] = per_k;
}

void run_restriction_check(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  Rng rng(sc.seed, "restriction-check");
  std::vector<int> gens;
  if (sc.params.contains("generators")) {
    for (const auto& v : sc.params.at("generators")) gens.push_back(v.get<int>());
  } else {
    const int count = rng.integer(1, 2);
    for (int i = 0; i < count; ++i) gens.push_back(rng.integer(0, sc.group->order() - 1));
  }
  const Subgroup h = subgroup_and_restriction(sc.group, gens);
  std::vector<Measure> probes;
  for (int k = 0; k < scaled(sc, param_int(sc, "probes", 3)); ++k) probes.push_back(random_measure(rng, h.group));
  auto to_list = [](const SpectrumSet& e) {
    json l = json::array();
    for (const auto& c : e.characters()) l.push_back(c.exponents);
    return l;
  };
  o.details["generators"] = gens;
  o.details["subgroup_shape"] = *h.group->abelian_shape();
  try {
    const auto r = restriction_spectrum_check(pi, h, probes);
    o.details["restricted_spectrum"] = to_list(r.restricted_spectrum);
    o.details["image_spectrum"] = to_list(r.image_spectrum);
    add(o, "sets_equal", r.sets_equal, r.sets_equal ? 0.0 : 1.0, 0.0);
    add(o, "transform_identity", r.transform_residual <= sc.tol, r.transform_residual, sc.tol);
    add(o, "restricted_schur", r.schur_residual <= sc.tol * 10, r.schur_residual, sc.tol * 10);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kVerificationFailure) throw;
    add(o, "sets_equal", false, 1.0, 0.0, {{"error", e.what()}});
  }
}

void run_norm_interval(const Scenario& sc, Outcome& o) {
  const auto& pi = require_rep(sc);
  Rng rng(sc.seed, "norm-interval");
  auto ms = measures_with_random(sc, rng, 3);
  const auto opt = norm_options(sc, 20);
  json norms = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto n = cb_bounds(gamma(pi, ms[i]).op, opt);
    const double mass_norm = ms[i].norm();
    add(o, indexed("ordered", i), n.lower <= n.upper + 1e-12, n.lower - n.upper, 1e-12);
    add(o, indexed("contractive", i), n.upper <= mass_norm + sc.tol, n.upper - mass_norm, sc.tol);
    bool monotone = true;
    for (std::size_t t = 1; t < n.upper_trace.size(); ++t) monotone = monotone && n.upper_trace[t] <= n.upper_trace[t - 1];
    add(o, indexed("monotone", i), monotone, monotone ? 0.0 : 1.0, 0.0);
    if (ms[i].is_positive()) {
      const double mass = ms[i].total_mass().real();
      const double gap = std::abs(n.upper - mass);
      add(o, indexed("tight", i), gap <= 1e-12 * std::max(1.0, mass), gap, 1e-12 * std::max(1.0, mass));
    }
    json entry = to_json(n);
    entry["mu_norm"] = mass_norm;
    norms.push_back(entry);
  }
  o.details["norms"] = norms;
}

Scenario parse_scenario(const json& j, std::size_t index, const RunOptions& options) {
  if (!j.is_object()) fail(ErrorCode::kSchema, "scenario must be an object");
  Scenario sc;
  sc.id = j.contains("id") ? j.at("id").get<std::string>() : "scenario-" + std::to_string(index);
  sc.experiment = j.at("experiment").get<std::string>();
  const auto& table = experiments();
  if (std::none_of(table.begin(), table.end(), [&](const auto& e) { return e.first == sc.experiment; })) {
    fail(ErrorCode::kSchema, "unknown experiment \"" + sc.experiment + "\"");
  }
  sc.seed = options.seed.value_or(j.value("seed", std::uint64_t{0}));
  sc.tol = options.tol.value_or(j.contains("tolerances") ? j.at("tolerances").value("tol", 1e-9) : 1e-9);
  sc.quick = options.quick;
  if (j.contains("params")) sc.params = j.at("params");
  if (sc.experiment == "square-example" && !j.contains("group")) return sc;
  sc.group = group_from_json(j.at("group"));
  if (j.contains("representation")) sc.rep = representation_from_json(j.at("representation"), sc.group);
  if (j.contains("measures")) {
    for (const auto& m : j.at("measures")) sc.measures.push_back(measure_from_json(m, sc.group));
  }
  return sc;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kNotARepresentation:
      return kExitNumerical;
    case ErrorCode::kVerificationFailure:
    case ErrorCode::kNotCompletelyPositive:
    case ErrorCode::kNotPositiveDefinite:
      return kExitAssertion;
    default:
      return kExitSchema;
  }
}

Outcome run_one(const json& j, std::size_t index, const RunOptions& options) {
  Outcome o;
  o.index = index;
  o.id = j.is_object() && j.contains("id") && j.at("id").is_string() ? j.at("id").get<std::string>()
                                                                     : "scenario-" + std::to_string(index);
  if (j.is_object() && j.contains("experiment") && j.at("experiment").is_string()) {
    o.experiment = j.at("experiment").get<std::string>();
  }
  try {
    const Scenario sc = parse_scenario(j, index, options);
    o.experiment = sc.experiment;
    for (const auto& [name, identity] : experiments()) {
      if (name == sc.experiment) o.identity = identity;
    }
    if (sc.experiment == "gamma-homomorphism") run_gamma_homomorphism(sc, o);
    else if (sc.experiment == "schur-identity") run_schur_identity(sc, o);
    else if (sc.experiment == "kernel-equivalence") run_kernel_equivalence(sc, o);
    else if (sc.experiment == "cp-posdef-equivalence") run_cp_posdef(sc, o);
    else if (sc.experiment == "square-example") run_square_example(sc, o);
    else if (sc.experiment == "restriction-check") run_restriction_check(sc, o);
    else run_norm_interval(sc, o);
    const bool all = std::all_of(o.assertions.begin(), o.assertions.end(), [](const auto& a) { return a.passed; });
    o.status = all ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    o.status = exit_for(e.code());
    o.error = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const json::exception& e) {
    o.status = kExitSchema;
    o.error = std::string("schema: ") + e.what();
  }
  return o;
}

const char* status_name(int status) {
  switch (status) {
    case kExitOk: return "pass";
    case kExitAssertion: return "assertion_failure";
    case kExitSchema: return "schema_error";
    default: return "numerical_failure";
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  return json(v).dump();
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : experiments()) n.push_back(e.first);
    return n;
  }();
  return names;
}

RunResult run_scenarios(const std::string& document, const RunOptions& options) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    json line = {{"summary", {{"exit_code", kExitSchema}, {"error", std::string("invalid JSON: ") + e.what()}}}};
    return {kExitSchema, line.dump() + "\n"};
  }
  std::vector<json> items;
  if (doc.is_object() && doc.contains("scenarios")) {
    if (!doc.at("scenarios").is_array()) {
      json line = {{"summary", {{"exit_code", kExitSchema}, {"error", "\"scenarios\" must be an array"}}}};
      return {kExitSchema, line.dump() + "\n"};
    }
    for (const auto& s : doc.at("scenarios")) items.push_back(s);
  } else {
    items.push_back(doc);
  }

  std::vector<Outcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) outcomes[i] = run_one(items[i], i, options);
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(items.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::stable_sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) { return a.id < b.id; });

  int exit_code = kExitOk;
  auto worse = [](int a, int b) {
    auto rank = [](int c) { return c == kExitSchema ? 3 : c == kExitNumerical ? 2 : c == kExitAssertion ? 1 : 0; };
    return rank(b) > rank(a) ? b : a;
  };
  std::size_t n_assert = 0, n_failed = 0;
  for (const auto& o : outcomes) {
    exit_code = worse(exit_code, o.status);
    n_assert += o.assertions.size();
    for (const auto& a : o.assertions) n_failed += a.passed ? 0 : 1;
  }

  std::ostringstream os;
  if (options.format == ReportFormat::kCsv) {
    os << "scenario,experiment,assertion,passed,value,tol\n";
    for (const auto& o : outcomes) {
      for (const auto& a : o.assertions) {
        os << csv_escape(o.id) << ',' << o.experiment << ',' << csv_escape(a.name) << ','
           << (a.passed ? "true" : "false") << ',' << format_double(a.value) << ',' << format_double(a.tol) << '\n';
      }
      if (!o.error.empty()) os << csv_escape(o.id) << ',' << o.experiment << ",error,false,," << csv_escape(o.error) << '\n';
    }
    for (const auto& o : outcomes) {
      for (const auto& [label, csv] : o.csv_blocks) os << "# " << o.id << ' ' << label << '\n' << csv;
    }
    os << "# exit_code=" << exit_code << '\n';
  } else {
    for (const auto& o : outcomes) {
      for (const auto& a : o.assertions) {
        json line = {{"scenario", o.id}, {"experiment", o.experiment}, {"assertion", a.name},
                     {"passed", a.passed}, {"value", a.value}, {"tol", a.tol}};
        for (const auto& [k, v] : a.extra.items()) line[k] = v;
        os << line.dump() << '\n';
      }
      json result = {{"scenario", o.id}, {"experiment", o.experiment}, {"identity", o.identity},
                     {"status", status_name(o.status)}, {"details", o.details}};
      if (!o.error.empty()) result["error"] = o.error;
      os << result.dump() << '\n';
    }
    json summary = {{"summary",
                     {{"scenarios", outcomes.size()}, {"assertions", n_assert}, {"failed", n_failed},
                      {"exit_code", exit_code}}}};
    os << summary.dump() << '\n';
  }
  return {exit_code, os.str()};
}

}  // namespace ehtp
