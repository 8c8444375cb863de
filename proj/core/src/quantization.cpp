#include "kgh/quantization.hpp"

#include <cmath>

namespace kgh {

AuxiliaryQuantities aux_at(double E, const QuantumNumbers& qn,
                           const PotentialParams& p) {
  const double nan = std::nan("");
  AuxiliaryQuantities x;
  const double g = qn.gamma();
  const double d2 = p.delta * p.delta;
  x.epsilon = 1.0 + p.a * E;
  x.alpha2 = (p.mass * p.mass - E * E) / d2;
  x.sigma2 = 2.0 * x.epsilon * (E * p.v0 + p.mass * p.s0) / (p.q * d2);
  const double depth2 = (p.v0 * p.v0 - p.s0 * p.s0) * x.epsilon * x.epsilon;
  x.beta2 = (depth2 / d2 - g) / (p.q * p.q);
  x.mu2 = x.alpha2 + x.sigma2 - x.beta2;
  x.nu = x.alpha2 >= 0.0 ? std::sqrt(x.alpha2) : nan;
  x.theta2 = 0.25 - x.beta2;
  const double rad = 0.25 - depth2 / (p.q * p.q * d2) + g / (p.q * p.q);
  x.sigma_cap = rad >= 0.0 ? std::sqrt(rad) - 0.5 : nan;
  return x;
}

namespace {

struct Relation {
  double lhs, rhs;
};

Relation relation_at(double E, int n, const QuantumNumbers& qn,
                     const PotentialParams& p, double pole_guard,
                     ValidityReport* report) {
  const AuxiliaryQuantities x = aux_at(E, qn, p);
  const double g = qn.gamma();
  const double eps = 1.0 + p.a * E;
  const double depth2 = (p.v0 * p.v0 - p.s0 * p.s0) * eps * eps;

  ValidityReport rep;
  rep.energy = E;
  rep.bound_domain = std::abs(E) < p.mass;
  rep.radicand =
      0.25 - depth2 / (p.q * p.q * p.delta * p.delta) + g / (p.q * p.q);
  rep.sigma_real = rep.radicand >= 0.0;

  double rhs = std::nan("");
  if (rep.sigma_real) {
    const double d = x.sigma_cap - static_cast<double>(n);
    rep.sigma_minus_n = d;
    rep.sigma_minus_n_nonzero = std::abs(d) > pole_guard;
    if (rep.sigma_minus_n_nonzero)
      rhs = 0.5 * p.delta * (d + (x.beta2 - x.sigma2) / d);
  }
  rep.rhs_positive = std::isfinite(rhs) && rhs >= 0.0;
  const double lhs =
      rep.bound_domain ? std::sqrt(p.mass * p.mass - E * E) : std::nan("");
  if (report) *report = rep;
  return {lhs, rhs};
}

}  // namespace

ValidityReport validity_at(double E, int n, const QuantumNumbers& qn,
                           const PotentialParams& p, double pole_guard) {
  ValidityReport rep;
  relation_at(E, n, qn, p, pole_guard, &rep);
  return rep;
}

double quantization_residual(double E, int n, const QuantumNumbers& qn,
                             const PotentialParams& p, double pole_guard) {
  ValidityReport rep;
  const Relation r = relation_at(E, n, qn, p, pole_guard, &rep);
  if (!rep.evaluable())
    throw DomainError("quantization residual not evaluable here", rep);
  return r.lhs - r.rhs;
}

namespace detail {

// Tolerant evaluation for scanners and polishers. Only the bound domain,
// Sigma reality and the pole guard gate the value; where the right-hand side
// is negative, f = lhs - rhs > 0 holds and no root can hide, so iterating
// through such points is safe.
std::optional<double> residual_weak(double E, int n, const QuantumNumbers& qn,
                                    const PotentialParams& p,
                                    double pole_guard) {
  ValidityReport rep;
  const Relation r = relation_at(E, n, qn, p, pole_guard, &rep);
  if (!rep.bound_domain || !rep.sigma_real || !rep.sigma_minus_n_nonzero)
    return std::nullopt;
  return r.lhs - r.rhs;
}

}  // namespace detail

double residual_derivative(double E, int n, const QuantumNumbers& qn,
                           const PotentialParams& p, double pole_guard) {
  const double h = std::max(1e-8, 1e-8 * std::abs(E));
  const double fp = quantization_residual(E + h, n, qn, p, pole_guard);
  const double fm = quantization_residual(E - h, n, qn, p, pole_guard);
  return (fp - fm) / (2.0 * h);
}

double residual_derivative_5pt(double E, int n, const QuantumNumbers& qn,
                               const PotentialParams& p, double pole_guard) {
  const double h = std::max(1e-8, 1e-8 * std::abs(E));
  const double f1 = quantization_residual(E - 2.0 * h, n, qn, p, pole_guard);
  const double f2 = quantization_residual(E - h, n, qn, p, pole_guard);
  const double f3 = quantization_residual(E + h, n, qn, p, pole_guard);
  const double f4 = quantization_residual(E + 2.0 * h, n, qn, p, pole_guard);
  return (f1 - 8.0 * f2 + 8.0 * f3 - f4) / (12.0 * h);
}

}  // namespace kgh
