#include "ldpbandit/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ldpb {
namespace {

AgentSpec ucb1() { return AgentSpec::parse("ucb1", std::nullopt); }
AgentSpec ldp(const char* name, double eps) {
  return AgentSpec::parse(name, Epsilon(eps));
}

TEST(Harness, HorizonEqualToArmsGivesGapSum) {
  auto inst = paper_instance_bernoulli();
  std::vector<std::uint64_t> cp{20};
  for (auto spec : {ucb1(), ldp("ldp-ucb-l", 1.0), ldp("ldp-ucb-b", 1.0)}) {
    auto tr = run_trial(inst, spec, 20, cp, RandomStream(1));
    ASSERT_EQ(tr.regret.size(), 1u);
    EXPECT_NEAR(tr.regret[0], 4.6, 1e-12);
  }
}

// Policy that always pulls the best arm; used to check the accounting.
struct OraclePolicy {
  std::size_t best;
  std::size_t select() const { return best; }
  void observe(std::size_t, PrivateResponse) {}
};

TEST(Harness, OptimalPolicyHasZeroRegret) {
  auto inst = paper_instance_bernoulli();
  auto rewards = arm_streams(RandomStream(2), inst.size());
  OraclePolicy p{0};
  auto id = [](double r) { return PrivateResponse{r}; };
  std::vector<std::uint64_t> cp{1, 10, 1000};
  auto tr = simulate(inst, 1000, cp, rewards, p, id);
  for (double r : tr.regret) EXPECT_EQ(r, 0.0);
}

// Records what the policy is shown; the curator tags responses so a raw
// reward leaking through would be visible.
struct SpyPolicy {
  std::vector<double> seen;
  std::size_t t = 0;
  std::size_t select() { return t++ % 3; }
  void observe(std::size_t, PrivateResponse r) { seen.push_back(r.value); }
};

TEST(Harness, PolicySeesOnlyCuratorOutput) {
  BanditInstance inst({Bernoulli{0.9}, Bernoulli{0.5}, Bernoulli{0.1}});
  auto rewards = arm_streams(RandomStream(3), 3);
  SpyPolicy spy;
  std::vector<double> raw;
  auto curator = [&](double r) {
    raw.push_back(r);
    return PrivateResponse{100.0 + r};
  };
  std::vector<std::uint64_t> cp{300};
  simulate(inst, 300, cp, rewards, spy, curator);
  ASSERT_EQ(spy.seen.size(), 300u);
  for (std::size_t i = 0; i < raw.size(); ++i) EXPECT_EQ(spy.seen[i], 100.0 + raw[i]);
}

TEST(Harness, TraceIsMonotoneAndBounded) {
  auto inst = paper_instance_mixed();
  auto cp = default_checkpoints(inst.size(), 5000);
  auto tr = run_trial(inst, ldp("ldp-ucb-b", 0.5), 5000, cp, RandomStream(4));
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    EXPECT_GE(tr.regret[i], i ? tr.regret[i - 1] : 0.0);
    EXPECT_LE(tr.regret[i], tr.steps[i] * inst.max_gap() + 1e-9);
  }
}

TEST(Harness, CheckpointsLogSpaced) {
  auto cp = default_checkpoints(20, 100000);
  EXPECT_EQ(cp.front(), 20u);
  EXPECT_EQ(cp.back(), 100000u);
  EXPECT_LE(cp.size(), 200u);
  EXPECT_GT(cp.size(), 150u);
  for (std::size_t i = 1; i < cp.size(); ++i) EXPECT_GT(cp[i], cp[i - 1]);
  auto tiny = default_checkpoints(5, 8);
  EXPECT_EQ(tiny, (std::vector<std::uint64_t>{5, 6, 7, 8}));
}

TEST(Harness, RejectsBadCheckpoints) {
  auto inst = paper_instance_bernoulli();
  std::vector<std::uint64_t> bad{50, 40};
  EXPECT_THROW(run_trial(inst, ucb1(), 100, bad, RandomStream(1)), std::invalid_argument);
  std::vector<std::uint64_t> past{200};
  EXPECT_THROW(run_trial(inst, ucb1(), 100, past, RandomStream(1)), std::invalid_argument);
}

ExperimentConfig small_config(std::uint32_t trials, unsigned threads) {
  ExperimentConfig cfg(paper_instance_bernoulli(),
                       {ucb1(), ldp("ldp-ucb-l", 1.0), ldp("ldp-ucb-b", 1.0)});
  cfg.horizon = 2000;
  cfg.trials = trials;
  cfg.base_seed = 77;
  cfg.threads = threads;
  return cfg;
}

TEST(Experiment, Deterministic) {
  auto a = run_experiment(small_config(4, 1));
  auto b = run_experiment(small_config(4, 1));
  for (std::size_t s = 0; s < a.series.size(); ++s)
    EXPECT_EQ(a.series[s].mean, b.series[s].mean);
}

TEST(Experiment, IndependentOfThreadCount) {
  auto a = run_experiment(small_config(6, 1));
  auto b = run_experiment(small_config(6, 4));
  for (std::size_t s = 0; s < a.series.size(); ++s) {
    EXPECT_EQ(a.series[s].mean, b.series[s].mean);
    EXPECT_EQ(a.series[s].std_error, b.series[s].std_error);
  }
}

TEST(Experiment, SingleTrialMeanIsTheTrace) {
  auto r = run_experiment(small_config(1, 1));
  for (const auto& s : r.series) {
    EXPECT_EQ(s.mean, s.trials[0].regret);
    for (double se : s.std_error) EXPECT_EQ(se, 0.0);
  }
}

TEST(Experiment, MoreTrialsKeepEarlierTraces) {
  auto a = run_experiment(small_config(3, 1));
  auto b = run_experiment(small_config(6, 2));
  for (std::size_t s = 0; s < a.series.size(); ++s)
    for (std::size_t k = 0; k < 3; ++k)
      EXPECT_EQ(a.series[s].trials[k].regret, b.series[s].trials[k].regret);
}

TEST(Experiment, SummaryStatistics) {
  TrialTrace x{{1, 2}, {1.0, 2.0}}, y{{1, 2}, {3.0, 6.0}};
  std::vector<TrialTrace> tr{x, y};
  std::vector<double> mean, se;
  summarize(tr, mean, se);
  EXPECT_EQ(mean, (std::vector<double>{2.0, 4.0}));
  // sample sd of {1,3} is sqrt(2); se = sqrt(2)/sqrt(2) = 1
  EXPECT_NEAR(se[0], 1.0, 1e-15);
  EXPECT_NEAR(se[1], 2.0, 1e-15);
}

TEST(Experiment, ValidationErrors) {
  auto cfg = small_config(2, 1);
  cfg.horizon = 10;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg = small_config(0, 1);
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  ExperimentConfig gauss(paper_instance_gaussian(), {ldp("ldp-ucb-l", 1.0)});
  gauss.horizon = 100;
  EXPECT_THROW(run_experiment(gauss), std::invalid_argument);
  ExperimentConfig ok(paper_instance_gaussian(), {ldp("ldp-ucb-ls", 1.0)});
  ok.horizon = 100;
  ok.trials = 1;
  EXPECT_NO_THROW(run_experiment(ok));
}

TEST(AgentSpec, ParseAndLabels) {
  EXPECT_THROW(AgentSpec::parse("ldp-ucb-b", std::nullopt), std::invalid_argument);
  EXPECT_THROW(AgentSpec::parse("nope", std::nullopt), std::invalid_argument);
  auto s = AgentSpec::parse("ucb1-s", Epsilon(1.0));
  EXPECT_EQ(s.label(), "ucb1-s");
  EXPECT_EQ(s.eps_label(), "inf");
  EXPECT_EQ(s.mechanism(), Mechanism::Sigmoid);
  EXPECT_EQ(ldp("ldp-ucb-l", 0.2).eps_label(), "0.2");
  EXPECT_EQ(ldp("ldp-ucb-bs", 0.5).mechanism(), Mechanism::CtbS);
}

TEST(Csv, HeaderOnlyForEmptyResult) {
  AggregateResult r;
  std::ostringstream os;
  write_csv(r, os);
  EXPECT_EQ(os.str(), std::string(kCsvHeader) + "\n");
}

TEST(Csv, RoundTrip) {
  auto r = run_experiment(small_config(2, 1));
  std::ostringstream os;
  write_csv(r, os);
  EXPECT_EQ(os.str().find('\r'), std::string::npos);
  std::istringstream is(os.str());
  auto rows = read_csv(is);
  ASSERT_EQ(rows.size(), r.series.size() * r.steps.size());
  std::size_t k = 0;
  for (const auto& s : r.series)
    for (std::size_t i = 0; i < r.steps.size(); ++i, ++k) {
      EXPECT_EQ(rows[k].agent, s.agent.label());
      EXPECT_EQ(rows[k].epsilon, s.agent.eps_label());
      EXPECT_EQ(rows[k].step, r.steps[i]);
      EXPECT_EQ(rows[k].trials, 2u);
      EXPECT_NEAR(rows[k].mean_regret, s.mean[i], 1e-11 * std::max(1.0, s.mean[i]));
      EXPECT_NEAR(rows[k].stderr_regret, s.std_error[i],
                  1e-11 * std::max(1.0, s.std_error[i]));
    }
  EXPECT_EQ(rows.front().epsilon, "inf");
}

TEST(Csv, ThreeRowsByHand) {
  AggregateResult r;
  r.steps = {1, 2, 3};
  r.trials = 1;
  SeriesResult s{ucb1(), {0.1, 0.25, 1.0 / 3}, {0, 0, 0}, {}};
  r.series.push_back(s);
  std::ostringstream os;
  write_csv(r, os);
  EXPECT_EQ(os.str(), std::string(kCsvHeader) +
                          "\nucb1,inf,1,0.1,0,1\nucb1,inf,2,0.25,0,1\n"
                          "ucb1,inf,3,0.333333333333,0,1\n");
}

TEST(Csv, MalformedInput) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::istringstream bad_row(std::string(kCsvHeader) + "\nucb1,inf,x,1,1,1\n");
  EXPECT_THROW(read_csv(bad_row), std::runtime_error);
}

TEST(Csv, UnwritablePathThrows) {
  AggregateResult r;
  EXPECT_THROW(write_csv(r, std::filesystem::path("/nonexistent-dir/x/y.csv")),
               std::runtime_error);
}

}  // namespace
}  // namespace ldpb
