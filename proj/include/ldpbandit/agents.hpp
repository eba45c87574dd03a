#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ldpbandit/mechanisms.hpp"

namespace ldpb {

enum class AgentKind { Ucb1, LdpUcbL, LdpUcbB, LdpUcbLS, LdpUcbBS };

std::string_view to_string(AgentKind k);
/// Accepts `ucb1|ldp-ucb-l|ldp-ucb-b|ldp-ucb-ls|ldp-ucb-bs`.
AgentKind parse_agent_kind(std::string_view name);
bool requires_epsilon(AgentKind k);
/// Laplace-family agents force exploration of under-sampled arms.
bool forces_exploration(AgentKind k);

/// Curator each agent is paired with. UCB1 reads raw rewards.
Mechanism curator_for(AgentKind k);

// Natural log throughout. `t` is real-valued so callers may evaluate the
// indices away from integer steps.
double ucb1_index(double mu_hat, std::uint64_t n_pulls, double t);
double ldp_l_index(double mu_hat, std::uint64_t n_pulls, double t, Epsilon eps);
/// 4 ln(t + 1): arms pulled at most this often are pulled next by the
/// Laplace agents.
double forced_exploration_threshold(std::uint64_t t);

/// Per-arm counts and response sums seen by one agent during one trial.
///
/// Alongside counts and sums the state caches each arm's empirical mean and
/// 1/sqrt(N_a), so arm selection costs one multiply-add per arm.
class AgentState {
 public:
  AgentState(std::size_t n_arms, std::optional<Epsilon> eps);

  std::size_t n_arms() const { return counts_.size(); }
  std::uint64_t t() const { return t_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const std::vector<double>& sums() const { return sums_; }
  std::optional<Epsilon> eps() const { return eps_; }
  double mean(std::size_t a) const { return means_[a]; }
  double inv_sqrt_count(std::size_t a) const { return inv_sqrt_counts_[a]; }

  /// Every arm has been pulled at least once.
  bool initialized() const { return unpulled_ == 0; }

  void observe(std::size_t arm, PrivateResponse resp);

 private:
  std::vector<std::uint64_t> counts_;
  std::vector<double> sums_;
  std::vector<double> means_;
  std::vector<double> inv_sqrt_counts_;
  std::uint64_t t_ = 0;
  std::size_t unpulled_ = 0;
  std::optional<Epsilon> eps_;
};

/// Next arm for `kind` after initialization. Exact index ties go to the
/// lowest arm index; so does the forced-exploration scan.
/// Throws std::logic_error if some arm has not been pulled yet.
std::size_t select_arm(const AgentState& state, AgentKind kind);

}  // namespace ldpb
