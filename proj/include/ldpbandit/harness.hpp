#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldpbandit/agents.hpp"
#include "ldpbandit/bandit.hpp"
#include "ldpbandit/mechanisms.hpp"
#include "ldpbandit/random.hpp"

namespace ldpb {

/// One agent configuration in an experiment. `sigmoid_preprocess` applies to
/// UCB1 only and makes it read s(reward) instead of the raw reward; this is
/// the non-private baseline for unbounded instances.
struct AgentSpec {
  AgentKind kind = AgentKind::Ucb1;
  std::optional<Epsilon> eps;
  bool sigmoid_preprocess = false;

  /// Throws std::invalid_argument on a missing or spurious epsilon.
  void validate() const;
  Mechanism mechanism() const;
  /// `ucb1`, `ucb1-s`, or the agent kind name.
  std::string label() const;
  /// Epsilon rendered for CSV and seed derivation; `inf` when non-private.
  std::string eps_label() const;

  /// `name` is an agent kind name or `ucb1-s`. LDP kinds require eps; UCB1
  /// variants drop it.
  static AgentSpec parse(std::string_view name, std::optional<Epsilon> eps);
};

/// Arm-selection policy driven by private responses. Pulls each arm once in
/// index order, then delegates to select_arm.
class Agent {
 public:
  Agent(const AgentSpec& spec, std::size_t n_arms);

  std::size_t select() const;
  void observe(std::size_t arm, PrivateResponse resp) { state_.observe(arm, resp); }
  const AgentState& state() const { return state_; }

 private:
  AgentKind kind_;
  AgentState state_;
};

/// Privatizes one raw reward per call with its own curator stream.
class Curator {
 public:
  Curator(Mechanism m, std::optional<Epsilon> eps, RandomStream stream);
  PrivateResponse operator()(double reward) {
    return privatize(mechanism_, reward, eps_, stream_);
  }

 private:
  Mechanism mechanism_;
  std::optional<Epsilon> eps_;
  RandomStream stream_;
};

/// Cumulative pseudo-regret (sum of true gaps of pulled arms) after each
/// checkpoint step.
struct TrialTrace {
  std::vector<std::uint64_t> steps;
  std::vector<double> regret;
};

/// `count` log-spaced steps from `n_arms` to `horizon`, deduplicated,
/// strictly increasing and ending at `horizon`.
std::vector<std::uint64_t> default_checkpoints(std::size_t n_arms,
                                               std::uint64_t horizon,
                                               std::size_t count = 200);

/// Per-arm reward streams of one trial. Arm a's k-th pull reads the k-th
/// draw of stream a, so a reward sequence replays across policies.
std::vector<RandomStream> arm_streams(const RandomStream& trial,
                                      std::size_t n_arms);

/// Core bandit loop. `policy` needs `select()` and `observe(arm, resp)`;
/// `curator` maps a raw reward to a PrivateResponse. The raw reward goes
/// only to the curator and the policy sees only the curator's output.
template <class Policy, class CuratorFn>
TrialTrace simulate(const BanditInstance& inst, std::uint64_t horizon,
                    std::span<const std::uint64_t> checkpoints,
                    std::vector<RandomStream>& rewards, Policy& policy,
                    CuratorFn& curator) {
  if (rewards.size() != inst.size())
    throw std::invalid_argument("one reward stream per arm required");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] > horizon || (i && checkpoints[i] <= checkpoints[i - 1]))
      throw std::invalid_argument(
          "checkpoints must be strictly increasing and <= horizon");
  }
  TrialTrace trace;
  trace.steps.assign(checkpoints.begin(), checkpoints.end());
  trace.regret.reserve(checkpoints.size());
  const auto& gaps = inst.gaps();
  double regret = 0.0;
  std::size_t next = 0;
  while (next < checkpoints.size() && checkpoints[next] == 0) {
    trace.regret.push_back(0.0);
    ++next;
  }
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const std::size_t arm = policy.select();
    const double reward = inst.arm(arm).sample(rewards[arm]);
    regret += gaps[arm];
    policy.observe(arm, curator(reward));
    if (next < checkpoints.size() && checkpoints[next] == t) {
      trace.regret.push_back(regret);
      ++next;
    }
  }
  return trace;
}

/// One trial of `spec` on `inst` to step `horizon`, fully determined by
/// `trial_stream`. Requires horizon >= number of arms.
TrialTrace run_trial(const BanditInstance& inst, const AgentSpec& spec,
                     std::uint64_t horizon,
                     std::span<const std::uint64_t> checkpoints,
                     const RandomStream& trial_stream);

/// Stream for trial `trial` of `spec` under `base_seed`.
RandomStream trial_stream_for(std::uint64_t base_seed, const AgentSpec& spec,
                              std::uint64_t trial);

struct ExperimentConfig {
  ExperimentConfig(BanditInstance inst, std::vector<AgentSpec> agent_specs)
      : instance(std::move(inst)), agents(std::move(agent_specs)) {}

  BanditInstance instance;
  std::vector<AgentSpec> agents;
  std::uint64_t horizon = 0;
  std::uint32_t trials = 50;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> checkpoints;  // empty: default_checkpoints
  unsigned threads = 1;

  /// Throws std::invalid_argument when the config is unusable.
  void validate() const;
  std::vector<std::uint64_t> effective_checkpoints() const;
};

struct SeriesResult {
  AgentSpec agent;
  std::vector<double> mean;
  std::vector<double> std_error;
  std::vector<TrialTrace> trials;  // in trial-index order
};

struct AggregateResult {
  std::vector<std::uint64_t> steps;
  std::vector<SeriesResult> series;
  std::uint32_t trials = 0;
  std::string instance;  // instance descriptor echo
  std::uint64_t horizon = 0;
  std::uint64_t base_seed = 0;

  const SeriesResult& find(std::string_view label,
                           std::string_view eps_label) const;
};

/// Runs every (agent, trial) pair, possibly on several threads, and averages
/// per agent. The result does not depend on the thread count.
AggregateResult run_experiment(const ExperimentConfig& config);

/// Mean and standard error per checkpoint over `traces`.
void summarize(std::span<const TrialTrace> traces, std::vector<double>& mean,
               std::vector<double>& std_error);

// CSV schema: agent,epsilon,step,mean_regret,stderr_regret,trials

inline constexpr std::string_view kCsvHeader =
    "agent,epsilon,step,mean_regret,stderr_regret,trials";

struct CsvRow {
  std::string agent;
  std::string epsilon;  // `inf` for non-private agents
  std::uint64_t step = 0;
  double mean_regret = 0.0;
  double stderr_regret = 0.0;
  std::uint32_t trials = 0;
};

/// Floats with 12 significant digits, LF line endings.
void write_csv(const AggregateResult& result, std::ostream& out);
/// Throws std::runtime_error if `path` cannot be written.
void write_csv(const AggregateResult& result, const std::filesystem::path& path);
/// Throws std::runtime_error on a malformed header or row.
std::vector<CsvRow> read_csv(std::istream& in);

std::string format_number(double x);

}  // namespace ldpb
