#include "ldpbandit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace ldpb {

void AgentSpec::validate() const {
  if (requires_epsilon(kind) && !eps)
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " requires an epsilon");
  if (kind == AgentKind::Ucb1 && eps)
    throw std::invalid_argument("ucb1 is non-private and takes no epsilon");
  if (sigmoid_preprocess && kind != AgentKind::Ucb1)
    throw std::invalid_argument(
        "sigmoid preprocessing flag applies to ucb1 only; use ldp-ucb-ls/bs");
}

Mechanism AgentSpec::mechanism() const {
  if (kind == AgentKind::Ucb1 && sigmoid_preprocess) return Mechanism::Sigmoid;
  return curator_for(kind);
}

std::string AgentSpec::label() const {
  if (kind == AgentKind::Ucb1 && sigmoid_preprocess) return "ucb1-s";
  return std::string(to_string(kind));
}

std::string AgentSpec::eps_label() const {
  return eps ? format_number(eps->value()) : std::string("inf");
}

AgentSpec AgentSpec::parse(std::string_view name, std::optional<Epsilon> eps) {
  AgentSpec spec;
  if (name == "ucb1-s") {
    spec.kind = AgentKind::Ucb1;
    spec.sigmoid_preprocess = true;
  } else {
    spec.kind = parse_agent_kind(name);
  }
  if (spec.kind != AgentKind::Ucb1) spec.eps = eps;
  spec.validate();
  return spec;
}

Agent::Agent(const AgentSpec& spec, std::size_t n_arms)
    : kind_(spec.kind), state_(n_arms, spec.eps) {
  spec.validate();
}

std::size_t Agent::select() const {
  if (!state_.initialized()) {
    const auto& c = state_.counts();
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), 0u) -
                                    c.begin());
  }
  return select_arm(state_, kind_);
}

Curator::Curator(Mechanism m, std::optional<Epsilon> eps, RandomStream stream)
    : mechanism_(m), eps_(eps), stream_(std::move(stream)) {}

std::vector<std::uint64_t> default_checkpoints(std::size_t n_arms,
                                               std::uint64_t horizon,
                                               std::size_t count) {
  if (horizon < n_arms || n_arms == 0)
    throw std::invalid_argument("horizon must be >= number of arms");
  std::vector<std::uint64_t> out;
  if (count < 2 || horizon == n_arms) {
    out.push_back(horizon);
    return out;
  }
  const double lo = std::log(static_cast<double>(n_arms));
  const double hi = std::log(static_cast<double>(horizon));
  for (std::size_t i = 0; i < count; ++i) {
    double x = std::exp(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    auto step = static_cast<std::uint64_t>(std::llround(x));
    step = std::clamp<std::uint64_t>(step, n_arms, horizon);
    if (out.empty() || step > out.back()) out.push_back(step);
  }
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

std::vector<RandomStream> arm_streams(const RandomStream& trial,
                                      std::size_t n_arms) {
  auto env = trial.child("environment");
  std::vector<RandomStream> out;
  out.reserve(n_arms);
  for (std::size_t a = 0; a < n_arms; ++a) out.push_back(env.child("arm", a));
  return out;
}

TrialTrace run_trial(const BanditInstance& inst, const AgentSpec& spec,
                     std::uint64_t horizon,
                     std::span<const std::uint64_t> checkpoints,
                     const RandomStream& trial_stream) {
  if (horizon < inst.size())
    throw std::invalid_argument("horizon must be >= number of arms");
  Agent agent(spec, inst.size());
  Curator curator(spec.mechanism(), spec.eps, trial_stream.child("curator"));
  auto rewards = arm_streams(trial_stream, inst.size());
  return simulate(inst, horizon, checkpoints, rewards, agent, curator);
}

RandomStream trial_stream_for(std::uint64_t base_seed, const AgentSpec& spec,
                              std::uint64_t trial) {
  return RandomStream(base_seed).child(spec.label() + "|" + spec.eps_label(),
                                       trial);
}

void ExperimentConfig::validate() const {
  if (agents.empty()) throw std::invalid_argument("no agents configured");
  for (const auto& a : agents) {
    a.validate();
    if (requires_unit_interval(a.mechanism()) && !instance.all_bounded_unit())
      throw std::invalid_argument(a.label() +
                                  " needs rewards in [0,1]; use a sigmoid variant");
  }
  if (horizon <= instance.size())
    throw std::invalid_argument("horizon must exceed the number of arms");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (checkpoints[i] == 0 || checkpoints[i] > horizon ||
        (i && checkpoints[i] <= checkpoints[i - 1]))
      throw std::invalid_argument(
          "checkpoints must be strictly increasing within [1, horizon]");
  if (!checkpoints.empty() && checkpoints.back() != horizon)
    throw std::invalid_argument("last checkpoint must equal the horizon");
}

std::vector<std::uint64_t> ExperimentConfig::effective_checkpoints() const {
  return checkpoints.empty() ? default_checkpoints(instance.size(), horizon)
                             : checkpoints;
}

const SeriesResult& AggregateResult::find(std::string_view label,
                                          std::string_view eps_label) const {
  for (const auto& s : series)
    if (s.agent.label() == label && s.agent.eps_label() == eps_label) return s;
  throw std::out_of_range("no series " + std::string(label) + " eps=" +
                          std::string(eps_label));
}

void summarize(std::span<const TrialTrace> traces, std::vector<double>& mean,
               std::vector<double>& std_error) {
  mean.clear();
  std_error.clear();
  if (traces.empty()) return;
  const std::size_t k = traces.front().regret.size();
  const double n = static_cast<double>(traces.size());
  mean.assign(k, 0.0);
  std_error.assign(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (const auto& tr : traces) s += tr.regret[j];
    const double m = s / n;
    double ss = 0.0;
    for (const auto& tr : traces) ss += (tr.regret[j] - m) * (tr.regret[j] - m);
    mean[j] = m;
    std_error[j] = traces.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  }
}

AggregateResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto checkpoints = config.effective_checkpoints();
  const std::size_t n_agents = config.agents.size();
  const std::size_t n_trials = config.trials;

  std::vector<std::vector<TrialTrace>> traces(
      n_agents, std::vector<TrialTrace>(n_trials));
  const std::size_t total = n_agents * n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const std::size_t a = job / n_trials;
      const std::size_t k = job % n_trials;
      try {
        const auto& spec = config.agents[a];
        traces[a][k] =
            run_trial(config.instance, spec, config.horizon, checkpoints,
                      trial_stream_for(config.base_seed, spec, k));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(threads, total); ++i)
      pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  AggregateResult result;
  result.steps = checkpoints;
  result.trials = config.trials;
  result.instance = config.instance.describe();
  result.horizon = config.horizon;
  result.base_seed = config.base_seed;
  for (std::size_t a = 0; a < n_agents; ++a) {
    SeriesResult s;
    s.agent = config.agents[a];
    summarize(traces[a], s.mean, s.std_error);
    s.trials = std::move(traces[a]);
    result.series.push_back(std::move(s));
  }
  return result;
}

}  // namespace ldpb
