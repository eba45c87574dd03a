#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "ldpbandit/random.hpp"

namespace ldpb {

/// Privacy budget. Positive and finite; the non-private case is expressed by
/// the absence of an Epsilon, never by an infinite one.
class Epsilon {
 public:
  explicit Epsilon(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value))
      throw std::invalid_argument("epsilon must be positive and finite");
  }
  double value() const { return value_; }

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  double value_;
};

/// The only reward information an agent ever sees.
struct PrivateResponse {
  double value;
};

/// Curators. `Identity` and `Sigmoid` are non-private pass-throughs used by
/// the UCB1 baselines.
enum class Mechanism { Identity, Sigmoid, Ctl, Ctb, CtlS, CtbS };

std::string_view to_string(Mechanism m);
/// Accepts `identity|sigmoid|ctl|ctb|ctl-s|ctb-s`.
Mechanism parse_mechanism(std::string_view name);
bool is_private(Mechanism m);
/// Output is a bit rather than a real.
bool is_bernoulli_family(Mechanism m);
/// Raw rewards must lie in [0, 1] for the mechanism's guarantee to hold.
bool requires_unit_interval(Mechanism m);

/// Laplace(b) by inverse CDF from one uniform u in (0, 1). u = 1/2 maps to 0.
inline double laplace_from_uniform(double u, double b) {
  double c = u - 0.5;
  double mag = -b * std::log(1.0 - 2.0 * std::abs(c));
  return c < 0.0 ? -mag : mag;
}

template <UniformSource S>
double laplace_sample(double b, S& s) {
  return laplace_from_uniform(s.uniform_open01(), b);
}

/// Numerically stable logistic function.
inline double sigmoid(double r) {
  if (r >= 0.0) return 1.0 / (1.0 + std::exp(-r));
  double e = std::exp(r);
  return e / (1.0 + e);
}

/// P{CTB(r) = 1} = (r e^eps + 1 - r) / (1 + e^eps). r must lie in [0, 1].
double ctb_success_prob(double r, Epsilon eps);

/// r + Laplace(1/eps). Any real r is accepted; the eps-DP guarantee only
/// covers r in [0, 1].
template <UniformSource S>
PrivateResponse ctl(double r, Epsilon eps, S& s) {
  return {r + laplace_sample(1.0 / eps.value(), s)};
}

template <UniformSource S>
PrivateResponse ctb(double r, Epsilon eps, S& s) {
  double p = ctb_success_prob(r, eps);
  return {s.uniform_open01() < p ? 1.0 : 0.0};
}

template <UniformSource S>
PrivateResponse ctl_s(double r, Epsilon eps, S& s) {
  return ctl(sigmoid(r), eps, s);
}

template <UniformSource S>
PrivateResponse ctb_s(double r, Epsilon eps, S& s) {
  return ctb(sigmoid(r), eps, s);
}

/// Dispatches to the named curator. Private mechanisms need an Epsilon.
/// CTL and CTB reject rewards outside [0, 1] here; unbounded rewards must go
/// through the sigmoid variants.
template <UniformSource S>
PrivateResponse privatize(Mechanism m, double r, std::optional<Epsilon> eps,
                          S& s) {
  if (is_private(m) && !eps)
    throw std::invalid_argument("private mechanism requires epsilon");
  if (requires_unit_interval(m) && !(r >= 0.0 && r <= 1.0))
    throw std::domain_error(
        "reward outside [0,1]; use a sigmoid-preprocessed mechanism");
  switch (m) {
    case Mechanism::Identity:
      return {r};
    case Mechanism::Sigmoid:
      return {sigmoid(r)};
    case Mechanism::Ctl:
      return ctl(r, *eps, s);
    case Mechanism::Ctb:
      return ctb(r, *eps, s);
    case Mechanism::CtlS:
      return ctl_s(r, *eps, s);
    case Mechanism::CtbS:
      return ctb_s(r, *eps, s);
  }
  throw std::logic_error("unhandled mechanism");
}

/// Worst likelihood ratio found by an analytic audit, with its witness.
struct AuditResult {
  bool passed = true;
  double max_ratio = 0.0;
  double bound = 0.0;  // e^eps
  double r = 0.0;
  double r_prime = 0.0;
  double x = 0.0;  // output value (density audits) or output bit
};

/// Analytic audit of a Bernoulli-family curator over a grid of `grid` inputs.
/// For `Ctb` the grid spans [0, 1]; for `CtbS` it spans raw rewards in
/// [-10, 10]. Compares both output bits.
AuditResult audit_bernoulli(Mechanism m, Epsilon eps, int grid = 11);

/// Density-ratio audit of an additive Laplace curator whose noise scale is
/// `noise_scale` (the honest curator uses 1/eps). Inputs on a `grid`-point
/// grid (as for audit_bernoulli), outputs on 1001 points of [-5, 6].
AuditResult audit_laplace(Mechanism m, Epsilon eps, double noise_scale,
                          int grid = 11);

/// Runs the audit that fits `m` with its honest parameters.
AuditResult audit(Mechanism m, Epsilon eps, int grid = 11);

inline constexpr double kAuditSlack = 1e-12;

}  // namespace ldpb
