#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ldpbandit/analysis.hpp"
#include "ldpbandit/figures.hpp"
#include "ldpbandit/harness.hpp"

namespace py = pybind11;
using namespace ldpb;

namespace {

analysis::GapProfile gaps_of(const std::string& arms) {
  return analysis::GapProfile::from_instance(parse_instance(arms));
}

py::dict run(const std::string& arms, const std::string& agent,
             std::optional<double> epsilon, std::uint64_t horizon,
             std::uint32_t trials, std::uint64_t seed, unsigned threads) {
  std::optional<Epsilon> eps;
  if (epsilon) eps = Epsilon(*epsilon);
  ExperimentConfig cfg(parse_instance(arms), {AgentSpec::parse(agent, eps)});
  cfg.horizon = horizon;
  cfg.trials = trials;
  cfg.base_seed = seed;
  cfg.threads = threads;
  AggregateResult r;
  {
    py::gil_scoped_release release;
    r = run_experiment(cfg);
  }
  const auto& s = r.series.front();
  py::dict out;
  out["agent"] = s.agent.label();
  out["epsilon"] = s.agent.eps_label();
  out["steps"] = r.steps;
  out["mean"] = s.mean;
  out["stderr"] = s.std_error;
  out["trials"] = r.trials;
  return out;
}

std::string reproduce(const std::string& figure, std::uint64_t horizon,
                      std::uint32_t trials, std::uint64_t seed, unsigned threads) {
  auto cfg = figure_config(figure, horizon, trials, seed);
  cfg.threads = threads;
  std::ostringstream os;
  {
    py::gil_scoped_release release;
    write_csv(run_experiment(cfg), os);
  }
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Locally differentially private bandit simulation core";

  m.def("sigmoid", &sigmoid, py::arg("r"));
  m.def("ctb_success_prob",
        [](double r, double eps) { return ctb_success_prob(r, Epsilon(eps)); },
        py::arg("r"), py::arg("epsilon"));
  m.def("ucb1_index", &ucb1_index, py::arg("mu_hat"), py::arg("n_pulls"), py::arg("t"));
  m.def("ldp_l_index",
        [](double mu, std::uint64_t n, double t, double eps) {
          return ldp_l_index(mu, n, t, Epsilon(eps));
        },
        py::arg("mu_hat"), py::arg("n_pulls"), py::arg("t"), py::arg("epsilon"));

  m.def("l_privacy_factor", [](double e) { return analysis::l_privacy_factor(Epsilon(e)); });
  m.def("b_privacy_factor", [](double e) { return analysis::b_privacy_factor(Epsilon(e)); });
  m.def("lower_bound_coeff",
        [](double e, const std::string& arms) {
          return analysis::lower_bound_coeff(Epsilon(e), gaps_of(arms));
        },
        py::arg("epsilon"), py::arg("arms") = "paper-bernoulli");
  m.def("ub_ldp_l",
        [](double e, std::uint64_t t, const std::string& arms) {
          return analysis::ub_ldp_l(Epsilon(e), gaps_of(arms), t);
        },
        py::arg("epsilon"), py::arg("horizon"), py::arg("arms") = "paper-bernoulli");
  m.def("ub_ldp_b",
        [](double e, std::uint64_t t, const std::string& arms) {
          return analysis::ub_ldp_b(Epsilon(e), gaps_of(arms), t);
        },
        py::arg("epsilon"), py::arg("horizon"), py::arg("arms") = "paper-bernoulli");

  m.def("kl_bernoulli", &analysis::kl_bernoulli, py::arg("p"), py::arg("q"));
  m.def("mixture_kl_bound",
        [](double e, double p, double q) { return analysis::mixture_kl_bound(Epsilon(e), p, q); },
        py::arg("epsilon"), py::arg("p"), py::arg("q"));
  m.def("ratio_kl_bound", &analysis::ratio_kl_bound, py::arg("r"), py::arg("big_r"));
  m.def("ctb_output_kl",
        [](double e, double p, double q) { return analysis::ctb_output_kl(Epsilon(e), p, q); },
        py::arg("epsilon"), py::arg("p"), py::arg("q"));

  py::class_<AuditResult>(m, "AuditResult")
      .def_readonly("passed", &AuditResult::passed)
      .def_readonly("max_ratio", &AuditResult::max_ratio)
      .def_readonly("bound", &AuditResult::bound)
      .def("__repr__", [](const AuditResult& a) {
        return "AuditResult(passed=" + std::string(a.passed ? "True" : "False") +
               ", max_ratio=" + format_number(a.max_ratio) + ")";
      });
  m.def("audit",
        [](const std::string& mech, double e, int grid) {
          return audit(parse_mechanism(mech), Epsilon(e), grid);
        },
        py::arg("mechanism"), py::arg("epsilon"), py::arg("grid") = 11);

  m.def("run", &run, py::arg("arms"), py::arg("agent"), py::arg("epsilon") = py::none(),
        py::arg("horizon"), py::arg("trials") = 50, py::arg("seed") = 0,
        py::arg("threads") = 1,
        "Run one agent; returns a dict with steps, mean and stderr lists.");
  m.def("reproduce", &reproduce, py::arg("figure"), py::arg("horizon") = 100000,
        py::arg("trials") = 50, py::arg("seed") = 20200, py::arg("threads") = 1,
        "Run one published panel configuration and return its CSV text.");
}
