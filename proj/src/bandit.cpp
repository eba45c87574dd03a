#include "ldpbandit/bandit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ldpb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void validate(const RewardDistribution::Variant& v) {
  std::visit(
      overloaded{
          [](const Bernoulli& d) {
            if (!is_probability(d.p))
              throw std::invalid_argument("bernoulli: p must lie in [0,1]");
          },
          [](const Beta& d) {
            if (!(d.alpha > 0.0) || !(d.beta > 0.0) || !std::isfinite(d.alpha) ||
                !std::isfinite(d.beta))
              throw std::invalid_argument("beta: alpha and beta must be > 0");
          },
          [](const TwoPoint& d) {
            if (!(d.lo >= 0.0 && d.lo < d.hi && d.hi <= 1.0))
              throw std::invalid_argument("twopoint: need 0 <= lo < hi <= 1");
            if (!is_probability(d.p_hi))
              throw std::invalid_argument("twopoint: p_hi must lie in [0,1]");
          },
          [](const UniformUnit&) {},
          [](const GaussianUnitVar& d) {
            if (!is_probability(d.mu))
              throw std::invalid_argument("gauss: mean must lie in [0,1]");
          },
      },
      v);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

double parse_double(std::string_view tok, std::string_view what) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad number '" + std::string(tok) + "' in " +
                                std::string(what));
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

RewardDistribution parse_arm(std::string_view desc) {
  auto parts = split(desc, ':');
  auto kind = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("arm '" + std::string(desc) + "' expects " +
                                  std::to_string(n) + " parameter(s)");
  };
  auto num = [&](std::size_t i) { return parse_double(parts[i], desc); };
  if (kind == "bern") {
    want(1);
    return Bernoulli{num(1)};
  }
  if (kind == "beta") {
    want(2);
    return Beta{num(1), num(2)};
  }
  if (kind == "twopoint") {
    want(3);
    return TwoPoint{num(1), num(2), num(3)};
  }
  if (kind == "unif") {
    want(0);
    return UniformUnit{};
  }
  if (kind == "gauss") {
    want(1);
    return GaussianUnitVar{num(1)};
  }
  throw std::invalid_argument("unknown arm kind '" + std::string(kind) + "'");
}

// 0.9 x1, 0.8 x5, 0.7 x5, 0.6 x5, 0.5 x4.
template <class Make>
BanditInstance standard_layout(Make make) {
  std::vector<RewardDistribution> arms;
  const std::pair<double, int> layout[] = {
      {0.9, 1}, {0.8, 5}, {0.7, 5}, {0.6, 5}, {0.5, 4}};
  for (auto [mu, count] : layout)
    for (int i = 0; i < count; ++i) arms.push_back(make(mu));
  return BanditInstance(std::move(arms));
}

}  // namespace

RewardDistribution::RewardDistribution(Variant v) : v_(v) { validate(v_); }

double RewardDistribution::mean() const {
  return std::visit(
      overloaded{
          [](const Bernoulli& d) { return d.p; },
          [](const Beta& d) { return d.alpha / (d.alpha + d.beta); },
          [](const TwoPoint& d) { return d.lo * (1.0 - d.p_hi) + d.hi * d.p_hi; },
          [](const UniformUnit&) { return 0.5; },
          [](const GaussianUnitVar& d) { return d.mu; },
      },
      v_);
}

double RewardDistribution::variance() const {
  return std::visit(
      overloaded{
          [](const Bernoulli& d) { return d.p * (1.0 - d.p); },
          [](const Beta& d) {
            double s = d.alpha + d.beta;
            return d.alpha * d.beta / (s * s * (s + 1.0));
          },
          [](const TwoPoint& d) {
            double w = d.hi - d.lo;
            return w * w * d.p_hi * (1.0 - d.p_hi);
          },
          [](const UniformUnit&) { return 1.0 / 12.0; },
          [](const GaussianUnitVar&) { return 1.0; },
      },
      v_);
}

double RewardDistribution::sample(RandomStream& s) const {
  return std::visit(
      overloaded{
          [&](const Bernoulli& d) { return s.uniform01() < d.p ? 1.0 : 0.0; },
          [&](const Beta& d) {
            std::gamma_distribution<double> ga(d.alpha, 1.0);
            std::gamma_distribution<double> gb(d.beta, 1.0);
            double x = ga(s);
            double y = gb(s);
            return x / (x + y);
          },
          [&](const TwoPoint& d) {
            return s.uniform01() < d.p_hi ? d.hi : d.lo;
          },
          [&](const UniformUnit&) { return s.uniform01(); },
          [&](const GaussianUnitVar& d) { return d.mu + s.normal(); },
      },
      v_);
}

std::string RewardDistribution::describe() const {
  return std::visit(
      overloaded{
          [](const Bernoulli& d) { return "bern:" + fmt(d.p); },
          [](const Beta& d) {
            return "beta:" + fmt(d.alpha) + ":" + fmt(d.beta);
          },
          [](const TwoPoint& d) {
            return "twopoint:" + fmt(d.lo) + ":" + fmt(d.hi) + ":" + fmt(d.p_hi);
          },
          [](const UniformUnit&) { return std::string("unif"); },
          [](const GaussianUnitVar& d) { return "gauss:" + fmt(d.mu); },
      },
      v_);
}

BanditInstance::BanditInstance(std::vector<RewardDistribution> arms)
    : arms_(std::move(arms)) {
  if (arms_.size() < 2)
    throw std::invalid_argument("a bandit instance needs at least 2 arms");
  mu_star_ = arms_.front().mean();
  for (const auto& d : arms_) mu_star_ = std::max(mu_star_, d.mean());
  gaps_.reserve(arms_.size());
  for (const auto& d : arms_) gaps_.push_back(mu_star_ - d.mean());
}

double BanditInstance::max_gap() const {
  return *std::max_element(gaps_.begin(), gaps_.end());
}

double BanditInstance::gap_sum() const {
  return std::accumulate(gaps_.begin(), gaps_.end(), 0.0);
}

bool BanditInstance::all_bernoulli() const {
  return std::all_of(arms_.begin(), arms_.end(),
                     [](const auto& d) { return d.is_bernoulli(); });
}

bool BanditInstance::all_gaussian() const {
  return std::all_of(arms_.begin(), arms_.end(),
                     [](const auto& d) { return d.is_gaussian(); });
}

bool BanditInstance::all_bounded_unit() const {
  return std::all_of(arms_.begin(), arms_.end(),
                     [](const auto& d) { return d.bounded_unit(); });
}

std::string BanditInstance::describe() const {
  std::string out;
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    if (a) out += ',';
    out += arms_[a].describe();
  }
  return out;
}

BanditInstance parse_instance(std::string_view spec) {
  if (spec == "paper-bernoulli") return paper_instance_bernoulli();
  if (spec == "paper-mixed") return paper_instance_mixed();
  if (spec == "paper-gaussian") return paper_instance_gaussian();
  std::vector<RewardDistribution> arms;
  for (auto tok : split(spec, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty arm descriptor");
    arms.push_back(parse_arm(tok));
  }
  return BanditInstance(std::move(arms));
}

BanditInstance paper_instance_bernoulli() {
  return standard_layout([](double mu) { return RewardDistribution(Bernoulli{mu}); });
}

BanditInstance paper_instance_mixed() {
  return standard_layout([](double mu) -> RewardDistribution {
    if (mu == 0.8) return Beta{4.0, 1.0};
    if (mu == 0.7) return TwoPoint{0.4, 1.0, 0.5};
    if (mu == 0.5) return UniformUnit{};
    return Bernoulli{mu};
  });
}

BanditInstance paper_instance_gaussian() {
  return standard_layout(
      [](double mu) { return RewardDistribution(GaussianUnitVar{mu}); });
}

}  // namespace ldpb
