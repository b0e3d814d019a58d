#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liechains/checks.hpp"

namespace liechains {

inline constexpr std::array<std::string_view, 6> kSuiteNames{"algebra",   "quaternion", "extension",
                                                              "normality", "chains",     "reconstruction"};

inline bool is_suite_name(std::string_view s) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), s) != kSuiteNames.end();
}

struct SuiteConfig {
  Signature sig{2, 1};
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::vector<std::string> suites{kSuiteNames.begin(), kSuiteNames.end()};
  bool timing = false;
  bool parallel = true;

  void validate() const {
    if (trials < 1) throw Error("SuiteConfig: trials must be at least 1");
    for (const auto& s : suites)
      if (!is_suite_name(s)) throw Error("SuiteConfig: unknown suite '" + s + "'");
  }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> suites;

  bool all_pass() const {
    for (const auto& s : suites)
      for (const auto& c : s.checks)
        if (!c.pass) return false;
    return true;
  }
};

namespace detail {

/// splitmix64 step; decorrelates per-suite seeds derived from one seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using CheckFn = std::function<CheckRecord()>;

inline CheckRecord timed(const CheckFn& fn, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.name = "unexpected exception";
    r.fail(e.what());
  }
  if (timing) r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// Runs one named suite. All randomness comes from a Sampler seeded from
/// the config seed and the suite's position in `kSuiteNames`.
inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  using namespace checks;
  const auto index = static_cast<std::uint64_t>(std::find(kSuiteNames.begin(), kSuiteNames.end(), name) -
                                                kSuiteNames.begin());
  Sampler rng(detail::mix_seed(cfg.seed * kSuiteNames.size() + index));
  const Signature& s = cfg.sig;
  const std::size_t t = cfg.trials;
  std::vector<detail::CheckFn> fns;
  std::optional<ExtensionPair> pair;

  if (name == "algebra") {
    fns = {[&] { return jacobi_so(s); },
           [&] { return grading_so(s); },
           [&] { return levi_closed_form(s, t, rng); },
           [&] { return levi_orthogonal(s, t, rng); },
           [&] { return levi_determinant(s, t, rng); },
           [&] { return levi_nondegenerate(s); },
           [&] { return g0_adjoint(s, t, rng); },
           [&] { return rank_nullity(t, rng); },
           [&] { return solve_consistent(t, rng); },
           [&] { return exp_nilpotent_inverse(s, t, rng); },
           [&] { return exp_float_agrees(s, t, rng); }};
  } else if (name == "quaternion") {
    fns = {[&] { return quat_multiplicative(t, rng); },
           [&] { return quat_norm_is_det(t, rng); },
           [&] { return quat_rank_one_witness(s, t, rng); },
           [&] { return quat_levi_compatible(s, t, rng); },
           [&] { return quat_max_subspaces(s, t, rng); },
           [&] { return quat_eigenspaces(s, t, rng); }};
  } else if (name == "extension") {
    pair.emplace(s);
    std::vector<CheckRecord> out;
    const auto add = [&](const detail::CheckFn& fn) { out.push_back(detail::timed(fn, cfg.timing)); };
    // The three pair conditions share one sampler pass.
    add([&] { return from_condition(check_equivariance(s, t, rng), "alpha(Ad(h) x) = Ad(i(h)) alpha(x) for h in Q"); });
    std::optional<std::pair<ConditionResult, ConditionResult>> deriv;
    add([&] {
      deriv = check_derivative(s, t, rng);
      return from_condition(deriv->first, "the restriction of alpha to q is the derivative of i");
    });
    add([&] { return from_condition(deriv.value().second, "the restriction of alpha to q is the derivative of i"); });
    add([&] { return from_condition(check_isomorphism(s), "alpha induces a linear isomorphism g/q -> sl/p"); });
    add([&] { return from_condition(check_homomorphism_exact(s, t, rng), "i: Q -> PGL(2n+2) is a homomorphism"); });
    add([&] { return from_condition(check_homomorphism_float(s, t, rng), "i: Q -> PGL(2n+2) is a homomorphism"); });
    add([&] { return hat_lift_section(*pair, t, rng); });
    add([&] { return psi_support(*pair); });
    add([&] { return psi_symmetrization(*pair, t, rng); });
    add([&] { return psi_r_block(*pair, t, rng); });
    add([&] { return psi_q_equivariant(s, t, rng); });
    add([&] { return psi_curvature(*pair); });
    return {name, out};
  } else if (name == "normality") {
    fns = {[&] { return codifferential_of_psi(ExtensionPair(s)); }};
  } else if (name == "chains") {
    fns = {[&] { return chain_exponential(s, t, rng); },
           [&] { return chain_identity_closed_form(s, t, rng); },
           [&] { return chain_isotropy(s, t, rng); },
           [&] { return chain_equivariance(s, t, rng); },
           [&] { return chain_transverse(s, t, rng); },
           [&] { return q_stabilizes_origin(s, t, rng); }};
  } else if (name == "reconstruction") {
    pair.emplace(s);
    fns = {[&] { return s_nonzero(s); },
           [&] { return s_symmetric(s, t, rng); },
           [&] { return s_dual_path(*pair, t, rng); },
           [&] { return s_classification(s, t, rng); },
           [&] { return s_max_subspace(s, std::max<std::size_t>(1, t / 10), rng); },
           [&] { return s_invariance(s, std::max<std::size_t>(1, t / 10), 20, rng); }};
  } else {
    throw Error("run_suite: unknown suite '" + name + "'");
  }
  SuiteResult out{name, {}};
  for (const auto& fn : fns) out.checks.push_back(detail::timed(fn, cfg.timing));
  return out;
}

/// Runs the selected suites, in canonical order regardless of the order
/// given, optionally in parallel. Output is identical either way.
inline Report run(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<std::string> selected;
  for (const auto& name : kSuiteNames)
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end()) selected.emplace_back(name);

  Report report{cfg, {}};
  if (cfg.parallel) {
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& name : selected) jobs.push_back(std::async(std::launch::async, [&cfg, name] { return run_suite(name, cfg); }));
    for (auto& j : jobs) report.suites.push_back(j.get());
  } else {
    for (const auto& name : selected) report.suites.push_back(run_suite(name, cfg));
  }
  return report;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["signature"] = {{"p", r.config.sig.p}, {"q", r.config.sig.q}};
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  j["status"] = r.all_pass() ? "pass" : "fail";
  ordered_json suites = ordered_json::array();
  for (const auto& s : r.suites) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json rec;
      rec["name"] = c.name;
      rec["anchor"] = c.anchor;
      rec["status"] = c.pass ? "pass" : "fail";
      rec["trials"] = c.trials;
      rec["witness"] = c.pass ? ordered_json(nullptr) : ordered_json(c.witness);
      if (c.detail) rec["detail"] = *c.detail;
      if (c.max_error) rec["max_error"] = *c.max_error;
      rec["wall_time"] = c.wall_time ? ordered_json(*c.wall_time) : ordered_json(nullptr);
      checks.push_back(rec);
    }
    suites.push_back({{"suite", s.suite}, {"checks", checks}});
  }
  j["suites"] = suites;
  return j;
}

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

/// CSV with header t,c11,c12,c21,... (span entries row-major, 1-based).
inline void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows, std::size_t ambient) {
  os << 't';
  for (std::size_t i = 1; i <= ambient; ++i)
    for (std::size_t j = 1; j <= 2; ++j) os << ",c" << i << j;
  os << '\n';
  for (const auto& row : rows) {
    os << format_double(row.t);
    for (double v : row.values) os << ',' << format_double(v == 0.0 ? 0.0 : v);
    os << '\n';
  }
}

}  // namespace liechains
