#include "ldpbandit/agents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldpb {

std::string_view to_string(AgentKind k) {
  switch (k) {
    case AgentKind::Ucb1:
      return "ucb1";
    case AgentKind::LdpUcbL:
      return "ldp-ucb-l";
    case AgentKind::LdpUcbB:
      return "ldp-ucb-b";
    case AgentKind::LdpUcbLS:
      return "ldp-ucb-ls";
    case AgentKind::LdpUcbBS:
      return "ldp-ucb-bs";
  }
  return "?";
}

AgentKind parse_agent_kind(std::string_view name) {
  for (auto k : {AgentKind::Ucb1, AgentKind::LdpUcbL, AgentKind::LdpUcbB,
                 AgentKind::LdpUcbLS, AgentKind::LdpUcbBS})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown agent kind '" + std::string(name) + "'");
}

bool requires_epsilon(AgentKind k) { return k != AgentKind::Ucb1; }

bool forces_exploration(AgentKind k) {
  return k == AgentKind::LdpUcbL || k == AgentKind::LdpUcbLS;
}

Mechanism curator_for(AgentKind k) {
  switch (k) {
    case AgentKind::Ucb1:
      return Mechanism::Identity;
    case AgentKind::LdpUcbL:
      return Mechanism::Ctl;
    case AgentKind::LdpUcbB:
      return Mechanism::Ctb;
    case AgentKind::LdpUcbLS:
      return Mechanism::CtlS;
    case AgentKind::LdpUcbBS:
      return Mechanism::CtbS;
  }
  throw std::logic_error("unhandled agent kind");
}

double ucb1_index(double mu_hat, std::uint64_t n_pulls, double t) {
  return mu_hat + std::sqrt(2.0 * std::log(t) / static_cast<double>(n_pulls));
}

double ldp_l_index(double mu_hat, std::uint64_t n_pulls, double t,
                   Epsilon eps) {
  double n = static_cast<double>(n_pulls);
  double e = eps.value();
  return ucb1_index(mu_hat, n_pulls, t) +
         std::sqrt(32.0 * std::log(t) / (e * e * n));
}

double forced_exploration_threshold(std::uint64_t t) {
  return 4.0 * std::log(static_cast<double>(t) + 1.0);
}

AgentState::AgentState(std::size_t n_arms, std::optional<Epsilon> eps)
    : counts_(n_arms, 0),
      sums_(n_arms, 0.0),
      means_(n_arms, 0.0),
      inv_sqrt_counts_(n_arms, 0.0),
      unpulled_(n_arms),
      eps_(eps) {
  if (n_arms < 2) throw std::invalid_argument("agent needs at least 2 arms");
}

void AgentState::observe(std::size_t arm, PrivateResponse resp) {
  if (arm >= counts_.size()) throw std::out_of_range("arm index out of range");
  if (counts_[arm] == 0) --unpulled_;
  auto n = ++counts_[arm];
  sums_[arm] += resp.value;
  means_[arm] = sums_[arm] / static_cast<double>(n);
  inv_sqrt_counts_[arm] = 1.0 / std::sqrt(static_cast<double>(n));
  ++t_;
}

std::size_t select_arm(const AgentState& state, AgentKind kind) {
  if (!state.initialized())
    throw std::logic_error("select_arm called before every arm was pulled");
  const auto& counts = state.counts();
  const std::size_t n = counts.size();
  const double log_t = std::log(static_cast<double>(state.t()));

  // sqrt(2 ln t / N) [+ sqrt(32 ln t / (eps^2 N))] = coef / sqrt(N)
  double coef = std::sqrt(2.0 * log_t);
  if (kind == AgentKind::LdpUcbL || kind == AgentKind::LdpUcbLS) {
    if (!state.eps()) throw std::logic_error("LDP agent state lacks epsilon");
    coef += std::sqrt(32.0 * log_t) / state.eps()->value();
  }

  if (forces_exploration(kind)) {
    const double threshold = forced_exploration_threshold(state.t());
    for (std::size_t a = 0; a < n; ++a)
      if (static_cast<double>(counts[a]) <= threshold) return a;
  }

  std::size_t best = 0;
  double best_index = state.mean(0) + coef * state.inv_sqrt_count(0);
  for (std::size_t a = 1; a < n; ++a) {
    double index = state.mean(a) + coef * state.inv_sqrt_count(a);
    if (index > best_index) {
      best_index = index;
      best = a;
    }
  }
  return best;
}

}  // namespace ldpb
