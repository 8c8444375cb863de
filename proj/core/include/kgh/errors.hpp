#ifndef KGH_ERRORS_HPP
#define KGH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kgh {

// Evaluability of the quantization residual at a trial energy.
// The residual is well defined only when every flag below holds; invalid
// points are data for the scanner, not fatal conditions.
struct ValidityReport {
  bool bound_domain = false;          // |E| < m
  bool sigma_real = false;            // Sigma radicand >= 0
  bool sigma_minus_n_nonzero = false; // |Sigma - n| > pole guard
  bool rhs_positive = false;          // RHS >= 0, required for a root since LHS >= 0
  double energy = 0.0;
  double sigma_minus_n = 0.0;
  double radicand = 0.0;

  bool evaluable() const {
    return bound_domain && sigma_real && sigma_minus_n_nonzero && rhs_positive;
  }
};

class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, ValidityReport report)
      : std::runtime_error(what), report_(report) {}
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int n, int l)
      : std::runtime_error(what), n_(n), l_(l) {}
  int n() const { return n_; }
  int l() const { return l_; }

 private:
  int n_, l_;
};

class PoleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IntegrationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EmptySpectrumError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class GridTooSmallError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kgh

#endif
