#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liechains/report.hpp"

namespace {

using namespace liechains;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> suite_choices() { return {kSuiteNames.begin(), kSuiteNames.end()}; }

int write_or_print(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out << "' for writing\n";
    return kExitFail;
  }
  f << text;
  if (!f) {
    std::cerr << "error: write to '" << out << "' failed\n";
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Lie contact structures and their chains"};
  app.require_subcommand(1);

  int p = 2, q = 1;
  std::uint64_t seed = 1;

  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a JSON report");
  std::size_t trials = 100;
  std::vector<std::string> suites;
  std::string report_out;
  bool timing = false;
  bool serial = false;
  verify->add_option("--p", p, "Positive part of the bundle metric signature")->capture_default_str();
  verify->add_option("--q", q, "Negative part of the bundle metric signature")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", trials, "Random trials per check")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--suite", suites, "Suites to run (default: all)")->check(CLI::IsMember(suite_choices()));
  verify->add_option("--out", report_out, "Report path (default: stdout)");
  verify->add_flag("--timing", timing, "Record wall times (makes output nondeterministic)");
  verify->add_flag("--serial", serial, "Run suites one after another");

  auto* chains = app.add_subcommand("chains", "Export a chain trajectory as CSV");
  std::string g_choice = "identity";
  std::string t_min = "-1", t_max = "1";
  std::size_t steps = 5;
  std::string csv_out;
  chains->add_option("--p", p, "Positive part of the bundle metric signature")->capture_default_str();
  chains->add_option("--q", q, "Negative part of the bundle metric signature")->capture_default_str();
  chains->add_option("--seed", seed, "Seed for --g random")->capture_default_str();
  chains->add_option("--g", g_choice, "Base point: identity or random")
      ->check(CLI::IsMember({"identity", "random"}))
      ->capture_default_str();
  chains->add_option("--t-min", t_min, "Start parameter (rational or decimal)")->capture_default_str();
  chains->add_option("--t-max", t_max, "End parameter (rational or decimal)")->capture_default_str();
  chains->add_option("--steps", steps, "Number of samples (>= 2)")->capture_default_str();
  chains->add_option("--out", csv_out, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Signature sig;
  try {
    sig = Signature(p, q);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.sig = sig;
      cfg.seed = seed;
      cfg.trials = trials;
      if (!suites.empty()) cfg.suites = suites;
      cfg.timing = timing;
      cfg.parallel = !serial;
      const Report report = run(cfg);
      const int io = write_or_print(report_out, to_json(report).dump(2) + "\n");
      if (io != 0) return io;
      return report.all_pass() ? 0 : kExitFail;
    }

    Rat lo, hi;
    try {
      lo = parse_rat(t_min);
      hi = parse_rat(t_max);
      if (steps < 2) throw Error("--steps must be at least 2");
      if (lo > hi) throw Error("--t-min must not exceed --t-max");
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    MatR g = MatR::identity(sig.dim_ambient());
    if (g_choice == "random") {
      Sampler rng(seed);
      g = rng.group_element(sig);
    }
    std::ostringstream os;
    write_trajectory_csv(os, emit_trajectory(sig, g, lo, hi, steps), sig.dim_ambient());
    return write_or_print(csv_out, os.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
