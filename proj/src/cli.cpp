#include "ldpbandit/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ldpbandit/analysis.hpp"
#include "ldpbandit/figures.hpp"
#include "ldpbandit/harness.hpp"

namespace ldpb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAgentNames = {
    "ucb1", "ucb1-s", "ldp-ucb-l", "ldp-ucb-b", "ldp-ucb-ls", "ldp-ucb-bs"};
const std::vector<std::string> kMechanismNames = {"ctl", "ctb", "ctl-s",
                                                  "ctb-s"};

const CLI::Validator kPositiveFinite(
    [](std::string& s) -> std::string {
      double x = 0.0;
      try {
        std::size_t pos = 0;
        x = std::stod(s, &pos);
        if (pos != s.size()) return "not a number: " + s;
      } catch (const std::exception&) {
        return "not a number: " + s;
      }
      if (!(x > 0.0) || !std::isfinite(x))
        return "epsilon must be positive and finite, got " + s;
      return {};
    },
    "POSITIVE", "PositiveFinite");

BanditInstance instance_or_usage(const std::string& spec) {
  try {
    return parse_instance(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--arms: ") + e.what());
  }
}

AgentSpec agent_or_usage(const std::string& name, std::optional<double> eps) {
  bool private_agent = name != "ucb1" && name != "ucb1-s";
  if (private_agent && !eps)
    throw UsageError("agent " + name + " requires --epsilon");
  return AgentSpec::parse(name, eps ? std::optional<Epsilon>(Epsilon(*eps))
                                    : std::nullopt);
}

// Writes to `path`, or to `out` when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write(f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path);
}

struct RunOptions {
  std::string arms;
  std::string agent;
  std::optional<double> eps;
  std::uint64_t horizon = 0;
  std::uint32_t trials = 50;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

struct SweepOptions {
  std::string arms;
  std::vector<std::string> agents;
  std::vector<double> eps;
  std::uint64_t horizon = 0;
  std::uint32_t trials = 50;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

struct BoundsOptions {
  std::string arms = "paper-bernoulli";
  std::vector<double> eps;
  std::vector<std::uint64_t> horizons;
  std::optional<double> cs;
  std::string out;
};

struct AuditOptions {
  std::string mechanism;
  double eps = 1.0;
  int grid = 11;
  std::optional<double> noise_scale;
};

struct ReproduceOptions {
  std::string figure;
  std::string out;
  std::uint64_t horizon = 100000;
  std::uint32_t trials = 50;
  std::uint64_t seed = 20200;
  unsigned threads = 1;
};

void check_horizon(const BanditInstance& inst, std::uint64_t horizon) {
  if (horizon <= inst.size())
    throw UsageError("--horizon must exceed the number of arms (" +
                     std::to_string(inst.size()) + ")");
}

int do_run(const RunOptions& o, std::ostream& out, std::ostream&) {
  auto inst = instance_or_usage(o.arms);
  check_horizon(inst, o.horizon);
  ExperimentConfig cfg{inst, {agent_or_usage(o.agent, o.eps)}};
  cfg.horizon = o.horizon;
  cfg.trials = o.trials;
  cfg.base_seed = o.seed;
  cfg.threads = o.threads;
  auto result = run_experiment(cfg);
  emit(o.out, out, [&](std::ostream& s) { write_csv(result, s); });
  return kExitOk;
}

int do_sweep(const SweepOptions& o, std::ostream& out, std::ostream&) {
  auto inst = instance_or_usage(o.arms);
  check_horizon(inst, o.horizon);
  ExperimentConfig cfg{inst, {}};
  for (const auto& name : o.agents) {
    if (name == "ucb1" || name == "ucb1-s") {
      cfg.agents.push_back(agent_or_usage(name, std::nullopt));
      continue;
    }
    if (o.eps.empty()) throw UsageError("agent " + name + " requires --epsilon");
    for (double e : o.eps) cfg.agents.push_back(agent_or_usage(name, e));
  }
  cfg.horizon = o.horizon;
  cfg.trials = o.trials;
  cfg.base_seed = o.seed;
  cfg.threads = o.threads;
  auto result = run_experiment(cfg);
  emit(o.out, out, [&](std::ostream& s) { write_csv(result, s); });
  return kExitOk;
}

int do_bounds(const BoundsOptions& o, std::ostream& out, std::ostream& err) {
  auto inst = instance_or_usage(o.arms);
  for (auto t : o.horizons)
    if (t < 2) throw UsageError("--horizon values must be >= 2");
  if (o.cs && !(*o.cs > 0.0 && *o.cs < 1.0))
    throw UsageError("--cs must lie in (0, 1)");
  if (!inst.all_bernoulli())
    err << "warning: lower bound applies to Bernoulli instances only; "
           "lower_coeff left empty\n";
  const AgentKind algorithms[] = {AgentKind::LdpUcbL, AgentKind::LdpUcbB,
                                  AgentKind::LdpUcbLS, AgentKind::LdpUcbBS};
  emit(o.out, out, [&](std::ostream& s) {
    s << "algorithm,epsilon,T,lower_coeff,upper_bound,privacy_factor\n";
    for (auto kind : algorithms) {
      for (double e : o.eps) {
        auto rep = analysis::bound_report(kind, Epsilon(e), inst, o.horizons, o.cs);
        for (auto [t, ub] : rep.upper_per_T) {
          s << to_string(kind) << ',' << format_number(e) << ',' << t << ','
            << (rep.lower ? format_number(*rep.lower) : std::string()) << ','
            << format_number(ub) << ',' << format_number(rep.privacy_factor)
            << '\n';
        }
      }
    }
  });
  return kExitOk;
}

int do_audit(const AuditOptions& o, std::ostream& out, std::ostream& err) {
  auto m = parse_mechanism(o.mechanism);
  Epsilon eps(o.eps);
  if (o.grid < 2) throw UsageError("--grid must be >= 2");
  AuditResult res;
  if (o.noise_scale) {
    if (m != Mechanism::Ctl && m != Mechanism::CtlS)
      throw UsageError("--noise-scale applies to ctl and ctl-s only");
    if (!(*o.noise_scale > 0.0)) throw UsageError("--noise-scale must be > 0");
    res = audit_laplace(m, eps, *o.noise_scale, o.grid);
  } else {
    res = audit(m, eps, o.grid);
  }
  out << "mechanism=" << o.mechanism << " epsilon=" << format_number(o.eps)
      << " grid=" << o.grid << " max_ratio=" << format_number(res.max_ratio)
      << " bound=" << format_number(res.bound)
      << " result=" << (res.passed ? "pass" : "fail") << '\n';
  if (!res.passed) {
    err << "violation: r=" << format_number(res.r)
        << " r'=" << format_number(res.r_prime)
        << " output=" << format_number(res.x)
        << " ratio=" << format_number(res.max_ratio) << " > e^eps\n";
    return kExitFailure;
  }
  return kExitOk;
}

int do_reproduce(const ReproduceOptions& o, std::ostream&, std::ostream& err) {
  std::vector<std::string_view> tags;
  if (o.figure == "all") {
    auto all = figure_tags();
    tags.assign(all.begin(), all.end());
  } else {
    tags.push_back(o.figure);
  }
  std::filesystem::create_directories(o.out);
  for (auto tag : tags) {
    auto cfg = figure_config(tag, o.horizon, o.trials, o.seed);
    if (o.horizon <= cfg.instance.size())
      throw UsageError("--horizon must exceed the number of arms");
    cfg.threads = o.threads;
    auto start = std::chrono::steady_clock::now();
    auto result = run_experiment(cfg);
    auto path = std::filesystem::path(o.out) / (std::string(tag) + ".csv");
    write_csv(result, path);
    std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    err << tag << ": wrote " << path.string() << " (" << result.series.size()
        << " series, " << secs.count() << " s)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Simulation and verification tools for locally differentially "
               "private multi-armed bandits",
               "ldpbandit"};
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  RunOptions ro;
  auto* run_cmd = app.add_subcommand("run", "Run one agent over many trials and write a regret CSV");
  run_cmd->add_option("--arms", ro.arms, "Arm descriptors, e.g. bern:0.9,beta:4:1")->required();
  run_cmd->add_option("--agent", ro.agent, "Agent kind")->required()->check(CLI::IsMember(kAgentNames));
  run_cmd->add_option("--epsilon", ro.eps, "Privacy budget")->check(kPositiveFinite);
  run_cmd->add_option("--horizon", ro.horizon, "Steps per trial")->required();
  run_cmd->add_option("--trials", ro.trials, "Independent trials")->capture_default_str()->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", ro.seed, "Base seed")->capture_default_str();
  run_cmd->add_option("--out", ro.out, "Output CSV path (default: stdout)");
  run_cmd->add_option("--threads", ro.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  SweepOptions so;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run several agents across an epsilon list into one CSV");
  sweep_cmd->add_option("--arms", so.arms, "Arm descriptors")->required();
  sweep_cmd->add_option("--agents", so.agents, "Agent kinds")->required()->delimiter(',')->check(CLI::IsMember(kAgentNames));
  sweep_cmd->add_option("--epsilon", so.eps, "Privacy budgets")->delimiter(',')->check(kPositiveFinite);
  sweep_cmd->add_option("--horizon", so.horizon, "Steps per trial")->required();
  sweep_cmd->add_option("--trials", so.trials, "Independent trials")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", so.seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--out", so.out, "Output CSV path (default: stdout)");
  sweep_cmd->add_option("--threads", so.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  BoundsOptions bo;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate regret lower and upper bounds as CSV");
  bounds_cmd->add_option("--arms", bo.arms, "Arm descriptors")->capture_default_str();
  bounds_cmd->add_option("--epsilon", bo.eps, "Privacy budgets")->required()->delimiter(',')->check(kPositiveFinite);
  bounds_cmd->add_option("--horizon", bo.horizons, "Horizons")->required()->delimiter(',');
  bounds_cmd->add_option("--cs", bo.cs, "Sigmoid gap constant c_s (default by noise family)");
  bounds_cmd->add_option("--out", bo.out, "Output CSV path (default: stdout)");

  AuditOptions ao;
  auto* audit_cmd = app.add_subcommand("audit", "Check a curator's likelihood ratios against e^epsilon");
  audit_cmd->add_option("--mechanism", ao.mechanism, "Curator")->required()->check(CLI::IsMember(kMechanismNames));
  audit_cmd->add_option("--epsilon", ao.eps, "Privacy budget")->required()->check(kPositiveFinite);
  audit_cmd->add_option("--grid", ao.grid, "Input grid points")->capture_default_str();
  audit_cmd->add_option("--noise-scale", ao.noise_scale, "Override the Laplace noise scale (audits a mis-calibrated curator)");

  ReproduceOptions po;
  std::vector<std::string> fig_names{"all"};
  for (auto t : figure_tags()) fig_names.emplace_back(t);
  auto* repro_cmd = app.add_subcommand("reproduce", "Regenerate the CSV behind a published regret panel");
  repro_cmd->add_option("--figure", po.figure, "Panel tag or 'all'")->required()->check(CLI::IsMember(fig_names));
  repro_cmd->add_option("--out", po.out, "Output directory")->required();
  repro_cmd->add_option("--horizon", po.horizon, "Steps per trial")->capture_default_str();
  repro_cmd->add_option("--trials", po.trials, "Independent trials")->capture_default_str()->check(CLI::PositiveNumber);
  repro_cmd->add_option("--seed", po.seed, "Base seed")->capture_default_str();
  repro_cmd->add_option("--threads", po.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return do_run(ro, out, err);
    if (sweep_cmd->parsed()) return do_sweep(so, out, err);
    if (bounds_cmd->parsed()) return do_bounds(bo, out, err);
    if (audit_cmd->parsed()) return do_audit(ao, out, err);
    if (repro_cmd->parsed()) return do_reproduce(po, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ldpb::cli
