#ifndef KGH_QUANTIZATION_HPP
#define KGH_QUANTIZATION_HPP

#include <optional>

#include "kgh/errors.hpp"
#include "kgh/model.hpp"

namespace kgh {

// Abbreviations entering the transcendental energy relation, evaluated at a
// trial energy. Fields whose defining radicand is negative come back NaN;
// invalidity is data, not an exception.
struct AuxiliaryQuantities {
  double epsilon = 0.0;   // 1 + a E
  double alpha2 = 0.0;    // (m^2 - E^2) / delta^2
  double sigma2 = 0.0;    // 2 eps (E V0 + m S0) / (q delta^2)
  double beta2 = 0.0;     // [(V0^2 - S0^2) eps^2 / delta^2 - gamma] / q^2
  double mu2 = 0.0;       // alpha2 + sigma2 - beta2
  double nu = 0.0;        // +sqrt(alpha2), NaN outside the bound domain
  double theta2 = 0.0;    // 1/4 - beta2
  double sigma_cap = 0.0; // sqrt(1/4 - (V0^2-S0^2) eps^2/(q delta)^2 + gamma/q^2) - 1/2
};

AuxiliaryQuantities aux_at(double E, const QuantumNumbers& qn,
                           const PotentialParams& p);

ValidityReport validity_at(double E, int n, const QuantumNumbers& qn,
                           const PotentialParams& p, double pole_guard = 1e-9);

// f(E) = sqrt(m^2 - E^2) - (delta/2) [Sigma - n + (beta^2 - sigma^2)/(Sigma - n)].
// Zeros on (-m, m) are the bound-state energies. Throws DomainError carrying
// the ValidityReport when the point is not evaluable.
double quantization_residual(double E, int n, const QuantumNumbers& qn,
                             const PotentialParams& p, double pole_guard = 1e-9);

// Central finite difference with step max(1e-8, 1e-8 |E|).
double residual_derivative(double E, int n, const QuantumNumbers& qn,
                           const PotentialParams& p, double pole_guard = 1e-9);

// Five-point stencil, used as the denser-stencil cross-check.
double residual_derivative_5pt(double E, int n, const QuantumNumbers& qn,
                               const PotentialParams& p, double pole_guard = 1e-9);

namespace detail {

// Non-throwing variant for grid scans and in-bracket iteration. Points where
// only the sign condition on the right-hand side fails still return a value
// (necessarily positive), so brackets cannot be lost mid-iteration.
std::optional<double> residual_weak(double E, int n, const QuantumNumbers& qn,
                                    const PotentialParams& p,
                                    double pole_guard = 1e-9);

}  // namespace detail

}  // namespace kgh

#endif
