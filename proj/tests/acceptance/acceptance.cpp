// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Oracles come from tests/oracles.hpp, not from the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "ldpbandit/analysis.hpp"
#include "ldpbandit/figures.hpp"
#include "ldpbandit/harness.hpp"
#include "ldpbandit/mechanisms.hpp"
#include "oracles.hpp"

using namespace ldpb;
using namespace ldpb::analysis;

namespace {

constexpr double kEpsGrid[] = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0};
constexpr std::uint64_t kHorizon = 100000;
constexpr std::uint32_t kTrials = 50;
constexpr std::uint64_t kSeed = 20200;

int failures = 0;

struct Check {
  bool ok;
  std::string detail;
};

void report(const char* name, double budget_s, const std::function<Check()>& fn) {
  auto start = std::chrono::steady_clock::now();
  Check c = fn();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = budget_s <= 0 || secs < budget_s;
  bool ok = c.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s  %-40s %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", name, c.detail.c_str(),
              secs, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

AggregateResult run_figure(const char* tag) {
  auto cfg = figure_config(tag, kHorizon, kTrials, kSeed);
  cfg.threads = threads();
  return run_experiment(cfg);
}

struct Final {
  double mean, se;
};

Final final_of(const AggregateResult& r, const char* label, const std::string& eps) {
  const auto& s = r.find(label, eps);
  return {s.mean.back(), s.std_error.back()};
}

double separation(Final lo, Final hi) {
  return (hi.mean - lo.mean) / std::hypot(lo.se, hi.se);
}

Check ordering(const AggregateResult& r, const char* base, const char* mid,
               const char* top, const std::string& eps) {
  auto u = final_of(r, base, "inf"), b = final_of(r, mid, eps), l = final_of(r, top, eps);
  double s1 = separation(u, b), s2 = separation(b, l);
  return {s1 > 2 && s2 > 2,
          fmt("%s=%.0f %s=%.0f %s=%.0f sep=%.1f,%.1f", base, u.mean, mid, b.mean, top,
              l.mean, s1, s2)};
}

}  // namespace

int main() {
  std::printf("threads=%u horizon=%llu trials=%u seed=%llu\n", threads(),
              static_cast<unsigned long long>(kHorizon), kTrials,
              static_cast<unsigned long long>(kSeed));

  // Mechanism exactness.
  report("ctb likelihood ratios", 1.0, [] {
    double worst_gap = 0;
    bool ok = true;
    for (double e : kEpsGrid) {
      auto res = audit_bernoulli(Mechanism::Ctb, Epsilon(e), 11);
      // Endpoints r=1, r'=0 attain e^eps exactly.
      auto p1 = oracle::ctb_prob(1, e), p0 = oracle::ctb_prob(0, e);
      double endpoint = static_cast<double>(p1 / p0);
      ok &= res.passed && res.max_ratio <= std::exp(e) + 1e-12;
      ok &= std::abs(endpoint - std::exp(e)) <= 1e-12 * std::exp(e);
      ok &= std::abs(res.max_ratio - std::exp(e)) <= 1e-12 * std::exp(e);
      worst_gap = std::max(worst_gap, res.max_ratio - std::exp(e));
    }
    return Check{ok, fmt("max(ratio - e^eps)=%.2e", worst_gap)};
  });

  report("ctl density-ratio audit", 1.0, [] {
    bool ok = true;
    double worst = 0;
    for (double e : kEpsGrid) {
      auto res = audit(Mechanism::Ctl, Epsilon(e), 11);
      ok &= res.passed;
      worst = std::max(worst, res.max_ratio / res.bound);
    }
    return Check{ok, fmt("max ratio/e^eps=%.15f", worst)};
  });

  report("ctb_success_prob(0.9, 2)", 0, [] {
    double got = ctb_success_prob(0.9, Epsilon(2.0));
    double want = static_cast<double>(oracle::ctb_prob(oracle::Big("0.9"), 2));
    return Check{std::abs(got - want) <= 1e-9, fmt("got=%.12f oracle=%.12f", got, want)};
  });

  // Divergence inequalities.
  report("ctb output kl <= mixture bound", 1.0, [] {
    double worst = -INFINITY;
    for (double e : kEpsGrid)
      for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
          double p = i / 10.0, q = j / 10.0;
          // Exact KL through the extended-precision oracle.
          auto hp = oracle::ctb_prob(oracle::Big(i) / 10, e);
          auto hq = oracle::ctb_prob(oracle::Big(j) / 10, e);
          double exact = static_cast<double>(oracle::kl_bern(hp, hq));
          double lib = ctb_output_kl(Epsilon(e), p, q);
          double bound = mixture_kl_bound(Epsilon(e), p, q);
          worst = std::max({worst, exact - bound, lib - bound});
        }
    return Check{worst <= 1e-12, fmt("max(kl - bound)=%.3e over 726 points", worst)};
  });

  report("ratio kl bound, 100 random pairs", 1.0, [] {
    RandomStream s(kSeed);
    double worst = -INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> f(5), g(5);
      double sf = 0, sg = 0;
      for (int i = 0; i < 5; ++i) {
        sf += f[i] = 0.01 + s.uniform01();
        sg += g[i] = 0.01 + s.uniform01();
      }
      double r = INFINITY, big_r = 0;
      for (int i = 0; i < 5; ++i) {
        f[i] /= sf;
        g[i] /= sg;
        r = std::min(r, f[i] / g[i]);
        big_r = std::max(big_r, f[i] / g[i]);
      }
      worst = std::max(worst, oracle::discrete_kl(f, g) - ratio_kl_bound(r, big_r));
    }
    return Check{worst <= 1e-12, fmt("max(kl - bound)=%.3e", worst)};
  });

  report("gaussian sigmoid gap floor", 5.0, [] {
    const std::pair<double, double> pts[] = {{0.9, 0.6}, {1.0, 0.0}, {0.7, 0.65}};
    bool ok = true;
    std::string d;
    RandomStream root(kSeed);
    std::uint64_t k = 0;
    for (auto [lam, mu] : pts) {
      auto s = root.child("sigmoid-gap", k++);
      auto est = sigmoid_gap_estimate(lam, mu, 1000000, s);
      double floor = 0.076006 * (lam - mu);
      ok &= est.estimate >= floor - 3 * est.std_error;
      d += fmt("(%.2g,%.2g): %.5f>=%.5f ", lam, mu, est.estimate, floor);
    }
    return Check{ok, d};
  });

  // Bound-formula fixtures.
  report("privacy factors", 0, [] {
    double l2 = l_privacy_factor(Epsilon(2.0)), l02 = l_privacy_factor(Epsilon(0.2));
    double b2 = b_privacy_factor(Epsilon(2.0)), b02 = b_privacy_factor(Epsilon(0.2));
    bool ok = std::abs(l2 - 9.0) < 1e-12 && std::abs(l02 - 441.0) < 1e-9 &&
              std::abs(b2 - 1.72) <= 0.03 && std::abs(b02 - 100.7) <= 0.5;
    return Check{ok, fmt("L: %.4g %.4g  B: %.4g %.4g", l2, l02, b2, b02)};
  });

  report("small-eps lower bound limit", 0, [] {
    auto g = GapProfile::from_instance(paper_instance_bernoulli());
    double eps = 0.01;
    double ratio = lower_bound_coeff(Epsilon(eps), g) / (g.inverse_sum() / (4 * eps * eps));
    return Check{ratio >= 0.999 && ratio <= 1.001, fmt("ratio=%.8f", ratio)};
  });

  // Regret reproduction.
  AggregateResult fig1a;
  report("fig1a ordering at eps=2", 60.0, [&] {
    fig1a = run_figure("fig1a");
    return ordering(fig1a, "ucb1", "ldp-ucb-b", "ldp-ucb-l", "2");
  });

  report("fig1a regret ratios at eps=2", 0, [&] {
    auto u = final_of(fig1a, "ucb1", "inf");
    double rb = final_of(fig1a, "ldp-ucb-b", "2").mean / u.mean;
    double rl = final_of(fig1a, "ldp-ucb-l", "2").mean / u.mean;
    return Check{rb >= 1.1 && rb <= 2.0 && rl >= 3.0 && rl <= 10.0,
                 fmt("B/UCB1=%.3f L/UCB1=%.3f", rb, rl)};
  });

  AggregateResult sweeps[2];
  const char* sweep_agents[2] = {"ldp-ucb-l", "ldp-ucb-b"};
  report("eps-monotonicity (fig1c, fig1d)", 0, [&] {
    sweeps[0] = run_figure("fig1c");
    sweeps[1] = run_figure("fig1d");
    bool ok = true;
    std::string d;
    const char* eps[] = {"0.2", "0.5", "1", "2"};
    for (int a = 0; a < 2; ++a) {
      double min_sep = INFINITY;
      for (int i = 0; i + 1 < 4; ++i) {
        auto hi = final_of(sweeps[a], sweep_agents[a], eps[i]);
        auto lo = final_of(sweeps[a], sweep_agents[a], eps[i + 1]);
        min_sep = std::min(min_sep, separation(lo, hi));
      }
      ok &= min_sep > 2;
      d += fmt("%s min sep=%.1f ", sweep_agents[a], min_sep);
    }
    return Check{ok, d};
  });

  report("upper-bound dominance", 0, [&] {
    auto gaps = GapProfile::from_instance(paper_instance_bernoulli());
    bool ok = true;
    std::string d;
    for (double e : {0.5, 2.0}) {
      auto el = format_number(e);
      double l = final_of(sweeps[0], "ldp-ucb-l", el).mean;
      double b = final_of(sweeps[1], "ldp-ucb-b", el).mean;
      double ul = ub_ldp_l(Epsilon(e), gaps, kHorizon);
      double ub = ub_ldp_b(Epsilon(e), gaps, kHorizon);
      ok &= l <= ul && b <= ub;
      d += fmt("eps=%s L %.0f<=%.0f B %.0f<=%.0f ", el.c_str(), l, ul, b, ub);
    }
    return Check{ok, d};
  });

  report("mixed-instance ordering (fig1e)", 0, [] {
    auto r = run_figure("fig1e");
    return ordering(r, "ucb1", "ldp-ucb-b", "ldp-ucb-l", "2");
  });

  report("gaussian sigmoid agents (fig2a)", 0, [] {
    auto r = run_figure("fig2a");
    const auto& base = r.find("ucb1-s", "inf");
    // Sublinear-looking: per-step regret over the second half of the run is
    // below that over the first half.
    auto mid = std::min_element(r.steps.begin(), r.steps.end(), [](auto a, auto b) {
                 return std::llabs(static_cast<long long>(a) - 50000) <
                        std::llabs(static_cast<long long>(b) - 50000);
               }) -
               r.steps.begin();
    bool ok = true;
    std::string d;
    for (auto [label, cap] : {std::pair{"ldp-ucb-ls", 81.0}, std::pair{"ldp-ucb-bs", 17.0}}) {
      const auto& s = r.find(label, "0.5");
      double fin = s.mean.back(), half = s.mean[mid];
      double first_rate = half / r.steps[mid];
      double second_rate = (fin - half) / (r.steps.back() - r.steps[mid]);
      double ratio = fin / base.mean.back();
      ok &= std::isfinite(fin) && second_rate < first_rate && ratio >= 1 && ratio <= cap;
      d += fmt("%s ratio=%.2f rate %.3f->%.3f ", label, ratio, first_rate, second_rate);
    }
    return Check{ok, d};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
