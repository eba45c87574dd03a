#include "ldpbandit/mechanisms.hpp"

#include <string>
#include <vector>

namespace ldpb {

std::string_view to_string(Mechanism m) {
  switch (m) {
    case Mechanism::Identity:
      return "identity";
    case Mechanism::Sigmoid:
      return "sigmoid";
    case Mechanism::Ctl:
      return "ctl";
    case Mechanism::Ctb:
      return "ctb";
    case Mechanism::CtlS:
      return "ctl-s";
    case Mechanism::CtbS:
      return "ctb-s";
  }
  return "?";
}

Mechanism parse_mechanism(std::string_view name) {
  for (auto m : {Mechanism::Identity, Mechanism::Sigmoid, Mechanism::Ctl,
                 Mechanism::Ctb, Mechanism::CtlS, Mechanism::CtbS})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown mechanism '" + std::string(name) + "'");
}

bool is_private(Mechanism m) {
  return m != Mechanism::Identity && m != Mechanism::Sigmoid;
}

bool is_bernoulli_family(Mechanism m) {
  return m == Mechanism::Ctb || m == Mechanism::CtbS;
}

bool requires_unit_interval(Mechanism m) {
  return m == Mechanism::Ctl || m == Mechanism::Ctb;
}

double ctb_success_prob(double r, Epsilon eps) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error(
        "ctb input must lie in [0,1]; sigmoid-preprocess unbounded rewards");
  double e = std::exp(eps.value());
  return (r * e + 1.0 - r) / (1.0 + e);
}

namespace {

// Raw inputs audited for a curator. Sigmoid variants accept any real, so
// their grid spans a wide symmetric range.
std::vector<double> input_grid(Mechanism m, int grid) {
  if (grid < 2) throw std::invalid_argument("audit grid needs >= 2 points");
  bool unbounded = m == Mechanism::CtlS || m == Mechanism::CtbS;
  double lo = unbounded ? -10.0 : 0.0;
  double hi = unbounded ? 10.0 : 1.0;
  std::vector<double> xs(grid);
  for (int i = 0; i < grid; ++i)
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
  return xs;
}

// Value the curator adds noise to, or feeds to the coin.
double preprocess(Mechanism m, double r) {
  return (m == Mechanism::CtlS || m == Mechanism::CtbS) ? sigmoid(r) : r;
}

void consider(AuditResult& res, double ratio, double r, double rp, double x) {
  if (ratio > res.max_ratio) {
    res.max_ratio = ratio;
    res.r = r;
    res.r_prime = rp;
    res.x = x;
  }
}

}  // namespace

AuditResult audit_bernoulli(Mechanism m, Epsilon eps, int grid) {
  if (!is_bernoulli_family(m))
    throw std::invalid_argument("audit_bernoulli needs ctb or ctb-s");
  AuditResult res;
  res.bound = std::exp(eps.value());
  auto xs = input_grid(m, grid);
  for (double r : xs) {
    double p1 = ctb_success_prob(preprocess(m, r), eps);
    for (double rp : xs) {
      double q1 = ctb_success_prob(preprocess(m, rp), eps);
      consider(res, p1 / q1, r, rp, 1.0);
      consider(res, (1.0 - p1) / (1.0 - q1), r, rp, 0.0);
    }
  }
  res.passed = res.max_ratio <= res.bound + kAuditSlack;
  return res;
}

AuditResult audit_laplace(Mechanism m, Epsilon eps, double noise_scale,
                          int grid) {
  if (m != Mechanism::Ctl && m != Mechanism::CtlS)
    throw std::invalid_argument("audit_laplace needs ctl or ctl-s");
  if (!(noise_scale > 0.0))
    throw std::invalid_argument("noise scale must be positive");
  AuditResult res;
  res.bound = std::exp(eps.value());
  auto xs = input_grid(m, grid);
  constexpr int kOutputs = 1001;
  for (double r : xs) {
    double c = preprocess(m, r);
    for (double rp : xs) {
      double cp = preprocess(m, rp);
      for (int k = 0; k < kOutputs; ++k) {
        double x = -5.0 + 11.0 * static_cast<double>(k) / (kOutputs - 1);
        // l(x - c | b) / l(x - c' | b)
        double ratio = std::exp((std::abs(x - cp) - std::abs(x - c)) / noise_scale);
        consider(res, ratio, r, rp, x);
      }
    }
  }
  res.passed = res.max_ratio <= res.bound + kAuditSlack;
  return res;
}

AuditResult audit(Mechanism m, Epsilon eps, int grid) {
  if (is_bernoulli_family(m)) return audit_bernoulli(m, eps, grid);
  if (m == Mechanism::Ctl || m == Mechanism::CtlS)
    return audit_laplace(m, eps, 1.0 / eps.value(), grid);
  throw std::invalid_argument("mechanism '" + std::string(to_string(m)) +
                              "' is not private; nothing to audit");
}

}  // namespace ldpb
