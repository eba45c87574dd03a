#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ldpbandit/agents.hpp"
#include "ldpbandit/bandit.hpp"
#include "ldpbandit/mechanisms.hpp"
#include "ldpbandit/random.hpp"

namespace ldpb::analysis {

/// Positive gaps of an instance; optimal arms are dropped.
class GapProfile {
 public:
  explicit GapProfile(std::vector<double> positive_gaps);
  static GapProfile from_instance(const BanditInstance& inst);

  const std::vector<double>& gaps() const { return gaps_; }
  bool empty() const { return gaps_.empty(); }
  double inverse_sum() const;  // sum of 1/gap
  double sum() const;

 private:
  std::vector<double> gaps_;
};

/// Gap-preservation floors for the sigmoid map.
inline constexpr double kCsGeneral = 0.0765 / std::numbers::e;
inline constexpr double kCsGaussian = 0.2066 / std::numbers::e;

/// Coefficient of log T in the eps-LDP regret lower bound for Bernoulli arms:
/// sum(1/gap) / (e^eps - e^-eps)^2. Zero when no arm is suboptimal.
double lower_bound_coeff(Epsilon eps, const GapProfile& gaps);

/// (1 + 4/eps)^2
double l_privacy_factor(Epsilon eps);
/// ((e^eps + 1) / (e^eps - 1))^2
double b_privacy_factor(Epsilon eps);

/// sum over gaps of 8 (1 + 4/eps)^2 ln T / gap + (1 + 2 pi^2 / 3) gap.
double ub_ldp_l(Epsilon eps, const GapProfile& gaps, std::uint64_t horizon);
/// sum over gaps of 8 ((e^eps+1)/(e^eps-1))^2 ln T / gap + (1 + pi^2/3) gap.
double ub_ldp_b(Epsilon eps, const GapProfile& gaps, std::uint64_t horizon);
/// Same shape as ub_ldp_b with the privacy factor replaced by `factor`;
/// factor 1 gives the non-private UCB1 bound.
double ub_ucb_with_factor(double factor, const GapProfile& gaps,
                          std::uint64_t horizon);
/// base_bound / c_s^2.
double ub_sigmoid(double base_bound, double c_s);

/// Upper bound for any LDP agent kind; sigmoid kinds use `c_s`.
double upper_bound(AgentKind kind, Epsilon eps, const GapProfile& gaps,
                   std::uint64_t horizon, double c_s);
double privacy_factor(AgentKind kind, Epsilon eps);

inline constexpr double kInfiniteDivergence =
    std::numeric_limits<double>::infinity();

/// KL(Bern(p) || Bern(q)) with 0 log 0 = 0. Returns kInfiniteDivergence
/// when q is 0 or 1 and p differs from q.
double kl_bernoulli(double p, double q);
/// (e^eps - e^-eps)^2 (p - q)^2
double mixture_kl_bound(Epsilon eps, double p, double q);
/// (R - r)^2 / (4 r R) for 0 < r <= R.
double ratio_kl_bound(double r, double big_r);
/// Exact KL between the CTB output laws of Bernoulli(p) and Bernoulli(q) arms.
double ctb_output_kl(Epsilon eps, double p, double q);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

/// Monte-Carlo estimate of E[s(lambda + Z1) - s(mu + Z2)], Z1, Z2 iid N(0,1).
MonteCarloEstimate sigmoid_gap_estimate(double lambda, double mu,
                                        std::uint64_t samples,
                                        RandomStream& stream);

/// Theory numbers for one (agent, eps) pair at several horizons.
struct BoundReport {
  AgentKind algorithm;
  Epsilon eps;
  std::optional<double> lower;  // absent outside Bernoulli instances
  double privacy_factor;
  std::map<std::uint64_t, double> upper_per_T;
};

BoundReport bound_report(AgentKind algorithm, Epsilon eps,
                         const BanditInstance& inst,
                         const std::vector<std::uint64_t>& horizons,
                         std::optional<double> c_s = std::nullopt);

/// c_s used for an instance when none is given.
double default_c_s(const BanditInstance& inst);

}  // namespace ldpb::analysis
