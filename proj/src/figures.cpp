#include "ldpbandit/figures.hpp"

#include <array>
#include <string>

namespace ldpb {

namespace {

constexpr std::array<std::string_view, 9> kTags = {
    "fig1a", "fig1b", "fig1c", "fig1d", "fig1e",
    "fig1f", "fig2a", "fig2b", "fig2c"};

constexpr std::array<double, 4> kSweep = {2.0, 1.0, 0.5, 0.2};

std::vector<AgentSpec> compare(std::string_view baseline, std::string_view l,
                               std::string_view b, double eps) {
  return {AgentSpec::parse(baseline, std::nullopt),
          AgentSpec::parse(l, Epsilon(eps)), AgentSpec::parse(b, Epsilon(eps))};
}

std::vector<AgentSpec> sweep(std::string_view agent) {
  std::vector<AgentSpec> out;
  for (double e : kSweep) out.push_back(AgentSpec::parse(agent, Epsilon(e)));
  return out;
}

}  // namespace

std::span<const std::string_view> figure_tags() { return kTags; }

ExperimentConfig figure_config(std::string_view tag, std::uint64_t horizon,
                               std::uint32_t trials, std::uint64_t seed) {
  auto make = [&](BanditInstance inst, std::vector<AgentSpec> agents) {
    ExperimentConfig c{std::move(inst), std::move(agents)};
    c.horizon = horizon;
    c.trials = trials;
    c.base_seed = seed;
    return c;
  };
  if (tag == "fig1a")
    return make(paper_instance_bernoulli(),
                compare("ucb1", "ldp-ucb-l", "ldp-ucb-b", 2.0));
  if (tag == "fig1b")
    return make(paper_instance_bernoulli(),
                compare("ucb1", "ldp-ucb-l", "ldp-ucb-b", 0.2));
  if (tag == "fig1c") return make(paper_instance_bernoulli(), sweep("ldp-ucb-l"));
  if (tag == "fig1d") return make(paper_instance_bernoulli(), sweep("ldp-ucb-b"));
  if (tag == "fig1e")
    return make(paper_instance_mixed(),
                compare("ucb1", "ldp-ucb-l", "ldp-ucb-b", 2.0));
  if (tag == "fig1f")
    return make(paper_instance_mixed(),
                compare("ucb1", "ldp-ucb-l", "ldp-ucb-b", 0.2));
  if (tag == "fig2a")
    return make(paper_instance_gaussian(),
                compare("ucb1-s", "ldp-ucb-ls", "ldp-ucb-bs", 0.5));
  if (tag == "fig2b") return make(paper_instance_gaussian(), sweep("ldp-ucb-ls"));
  if (tag == "fig2c") return make(paper_instance_gaussian(), sweep("ldp-ucb-bs"));
  throw std::invalid_argument("unknown figure '" + std::string(tag) + "'");
}

}  // namespace ldpb
