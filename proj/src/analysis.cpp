#include "ldpbandit/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ldpb::analysis {

using std::numbers::pi;

GapProfile::GapProfile(std::vector<double> positive_gaps)
    : gaps_(std::move(positive_gaps)) {
  for (double g : gaps_)
    if (!(g > 0.0 && g <= 1.0))
      throw std::invalid_argument("gap profile entries must lie in (0, 1]");
}

GapProfile GapProfile::from_instance(const BanditInstance& inst) {
  std::vector<double> out;
  for (double g : inst.gaps())
    if (g > 0.0) out.push_back(g);
  return GapProfile(std::move(out));
}

double GapProfile::inverse_sum() const {
  double s = 0.0;
  for (double g : gaps_) s += 1.0 / g;
  return s;
}

double GapProfile::sum() const {
  return std::accumulate(gaps_.begin(), gaps_.end(), 0.0);
}

double lower_bound_coeff(Epsilon eps, const GapProfile& gaps) {
  if (gaps.empty()) return 0.0;
  // e^eps - e^-eps = 2 sinh(eps); sinh keeps precision at small eps.
  double d = 2.0 * std::sinh(eps.value());
  return gaps.inverse_sum() / (d * d);
}

double l_privacy_factor(Epsilon eps) {
  double f = 1.0 + 4.0 / eps.value();
  return f * f;
}

double b_privacy_factor(Epsilon eps) {
  // (e^eps + 1)/(e^eps - 1) = coth(eps / 2)
  double f = 1.0 / std::tanh(eps.value() / 2.0);
  return f * f;
}

namespace {

double ucb_style_bound(double factor, double constant, const GapProfile& gaps,
                       std::uint64_t horizon) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  double log_t = std::log(static_cast<double>(horizon));
  double total = 0.0;
  for (double g : gaps.gaps()) total += 8.0 * factor * log_t / g + constant * g;
  return total;
}

}  // namespace

double ub_ldp_l(Epsilon eps, const GapProfile& gaps, std::uint64_t horizon) {
  return ucb_style_bound(l_privacy_factor(eps), 1.0 + 2.0 * pi * pi / 3.0, gaps,
                         horizon);
}

double ub_ldp_b(Epsilon eps, const GapProfile& gaps, std::uint64_t horizon) {
  return ub_ucb_with_factor(b_privacy_factor(eps), gaps, horizon);
}

double ub_ucb_with_factor(double factor, const GapProfile& gaps,
                          std::uint64_t horizon) {
  return ucb_style_bound(factor, 1.0 + pi * pi / 3.0, gaps, horizon);
}

double ub_sigmoid(double base_bound, double c_s) {
  if (!(c_s > 0.0 && c_s < 1.0))
    throw std::invalid_argument("c_s must lie in (0, 1)");
  return base_bound / (c_s * c_s);
}

double upper_bound(AgentKind kind, Epsilon eps, const GapProfile& gaps,
                   std::uint64_t horizon, double c_s) {
  switch (kind) {
    case AgentKind::LdpUcbL:
      return ub_ldp_l(eps, gaps, horizon);
    case AgentKind::LdpUcbB:
      return ub_ldp_b(eps, gaps, horizon);
    case AgentKind::LdpUcbLS:
      return ub_sigmoid(ub_ldp_l(eps, gaps, horizon), c_s);
    case AgentKind::LdpUcbBS:
      return ub_sigmoid(ub_ldp_b(eps, gaps, horizon), c_s);
    case AgentKind::Ucb1:
      return ub_ucb_with_factor(1.0, gaps, horizon);
  }
  throw std::logic_error("unhandled agent kind");
}

double privacy_factor(AgentKind kind, Epsilon eps) {
  switch (kind) {
    case AgentKind::LdpUcbL:
    case AgentKind::LdpUcbLS:
      return l_privacy_factor(eps);
    case AgentKind::LdpUcbB:
    case AgentKind::LdpUcbBS:
      return b_privacy_factor(eps);
    case AgentKind::Ucb1:
      return 1.0;
  }
  throw std::logic_error("unhandled agent kind");
}

namespace {

// p ln(p / q) with the 0 ln 0 = 0 convention.
double xlogx_over(double p, double q) {
  if (p == 0.0) return 0.0;
  if (q == 0.0) return kInfiniteDivergence;
  return p * std::log(p / q);
}

}  // namespace

double kl_bernoulli(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("kl_bernoulli: probabilities must lie in [0,1]");
  if (p == q) return 0.0;
  return xlogx_over(p, q) + xlogx_over(1.0 - p, 1.0 - q);
}

double mixture_kl_bound(Epsilon eps, double p, double q) {
  double d = 2.0 * std::sinh(eps.value());
  double g = p - q;
  return d * d * g * g;
}

double ratio_kl_bound(double r, double big_r) {
  if (!(r > 0.0)) throw std::invalid_argument("ratio_kl_bound: r must be > 0");
  if (!(big_r >= r) || !std::isfinite(big_r))
    throw std::invalid_argument("ratio_kl_bound: need r <= R < inf");
  double d = big_r - r;
  return d * d / (4.0 * r * big_r);
}

double ctb_output_kl(Epsilon eps, double p, double q) {
  return kl_bernoulli(ctb_success_prob(p, eps), ctb_success_prob(q, eps));
}

MonteCarloEstimate sigmoid_gap_estimate(double lambda, double mu,
                                        std::uint64_t samples,
                                        RandomStream& stream) {
  if (!(0.0 <= mu && mu <= lambda && lambda <= 1.0))
    throw std::invalid_argument("sigmoid_gap_estimate: need 0 <= mu <= lambda <= 1");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  // Welford accumulation of s(lambda + Z1) - s(mu + Z2).
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double x = sigmoid(lambda + stream.normal());
    double y = sigmoid(mu + stream.normal());
    double d = x - y;
    double delta = d - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (d - mean);
  }
  double n = static_cast<double>(samples);
  double var = m2 / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

double default_c_s(const BanditInstance& inst) {
  return inst.all_gaussian() ? kCsGaussian : kCsGeneral;
}

BoundReport bound_report(AgentKind algorithm, Epsilon eps,
                         const BanditInstance& inst,
                         const std::vector<std::uint64_t>& horizons,
                         std::optional<double> c_s) {
  auto gaps = GapProfile::from_instance(inst);
  double cs = c_s.value_or(default_c_s(inst));
  BoundReport rep{algorithm, eps, std::nullopt, privacy_factor(algorithm, eps),
                  {}};
  if (inst.all_bernoulli()) rep.lower = lower_bound_coeff(eps, gaps);
  for (auto t : horizons)
    rep.upper_per_T[t] = upper_bound(algorithm, eps, gaps, t, cs);
  return rep;
}

}  // namespace ldpb::analysis
