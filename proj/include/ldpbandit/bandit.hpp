#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "ldpbandit/random.hpp"

namespace ldpb {

struct Bernoulli {
  double p;
};
struct Beta {
  double alpha;
  double beta;
};
/// Two atoms: `hi` with probability `p_hi`, otherwise `lo`.
struct TwoPoint {
  double lo;
  double hi;
  double p_hi;
};
/// U[0, 1].
struct UniformUnit {};
/// N(mu, 1); mu is the rescaled arm mean and lies in [0, 1].
struct GaussianUnitVar {
  double mu;
};

/// Latent reward law of one arm. Parameters are validated on construction,
/// so every live value satisfies its variant's invariants.
class RewardDistribution {
 public:
  using Variant =
      std::variant<Bernoulli, Beta, TwoPoint, UniformUnit, GaussianUnitVar>;

  RewardDistribution(Variant v);  // NOLINT: implicit by intent
  template <class Alt>
    requires std::is_constructible_v<Variant, Alt> &&
             (!std::is_same_v<std::decay_t<Alt>, Variant>)
  RewardDistribution(Alt alt)  // NOLINT
      : RewardDistribution(Variant(alt)) {}

  const Variant& variant() const { return v_; }

  double mean() const;
  double variance() const;
  double sample(RandomStream& s) const;

  bool is_bernoulli() const { return std::holds_alternative<Bernoulli>(v_); }
  bool is_gaussian() const {
    return std::holds_alternative<GaussianUnitVar>(v_);
  }
  /// True when every sample lies in [0, 1].
  bool bounded_unit() const { return !is_gaussian(); }

  /// Descriptor in the textual instance syntax, e.g. `beta:4:1`.
  std::string describe() const;

 private:
  Variant v_;
};

inline double mean_of(const RewardDistribution& d) { return d.mean(); }
inline double sample_reward(const RewardDistribution& d, RandomStream& s) {
  return d.sample(s);
}

/// Ordered arm list with the optimal mean and per-arm gaps computed once.
class BanditInstance {
 public:
  explicit BanditInstance(std::vector<RewardDistribution> arms);

  std::size_t size() const { return arms_.size(); }
  const std::vector<RewardDistribution>& arms() const { return arms_; }
  const RewardDistribution& arm(std::size_t a) const { return arms_[a]; }
  double mu_star() const { return mu_star_; }
  const std::vector<double>& gaps() const { return gaps_; }
  double max_gap() const;
  double gap_sum() const;

  bool all_bernoulli() const;
  bool all_gaussian() const;
  bool all_bounded_unit() const;

  std::string describe() const;

 private:
  std::vector<RewardDistribution> arms_;
  double mu_star_ = 0.0;
  std::vector<double> gaps_;
};

/// Parses comma-separated descriptors: `bern:p`, `beta:a:b`,
/// `twopoint:lo:hi:p_hi`, `unif`, `gauss:mu`. Also accepts the canned names
/// `paper-bernoulli`, `paper-mixed` and `paper-gaussian`.
/// Throws std::invalid_argument on malformed input.
BanditInstance parse_instance(std::string_view spec);

/// 20 Bernoulli arms: 0.9, 0.8 x5, 0.7 x5, 0.6 x5, 0.5 x4.
BanditInstance paper_instance_bernoulli();
/// Same means; 0.9/0.6 Bernoulli, 0.8 Beta(4,1), 0.7 two-point {0.4, 1},
/// 0.5 uniform.
BanditInstance paper_instance_mixed();
/// Same means with unit-variance Gaussian noise.
BanditInstance paper_instance_gaussian();

}  // namespace ldpb
