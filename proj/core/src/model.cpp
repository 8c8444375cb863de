#include "kgh/model.hpp"

#include <cmath>
#include <stdexcept>

#include "kgh/errors.hpp"

namespace kgh {

const char* to_string(CouplingLimit limit) {
  switch (limit) {
    case CouplingLimit::General: return "general";
    case CouplingLimit::EMES: return "emes";
    case CouplingLimit::EMOS: return "emos";
    case CouplingLimit::PureVector: return "vector";
    case CouplingLimit::PureScalar: return "scalar";
  }
  return "general";
}

PotentialParams PotentialParams::emes(double depth, double a, double delta,
                                      double q, double mass) {
  PotentialParams p{depth, depth, a, q, delta, mass, CouplingLimit::EMES};
  p.validate();
  return p;
}

PotentialParams PotentialParams::emos(double depth, double a, double delta,
                                      double q, double mass) {
  PotentialParams p{depth, -depth, a, q, delta, mass, CouplingLimit::EMOS};
  p.validate();
  return p;
}

PotentialParams PotentialParams::pure_vector(double v0, double a, double delta,
                                             double q, double mass) {
  PotentialParams p{v0, 0.0, a, q, delta, mass, CouplingLimit::PureVector};
  p.validate();
  return p;
}

PotentialParams PotentialParams::pure_scalar(double s0, double a, double delta,
                                             double q, double mass) {
  PotentialParams p{0.0, s0, a, q, delta, mass, CouplingLimit::PureScalar};
  p.validate();
  return p;
}

PotentialParams PotentialParams::general(double v0, double s0, double a,
                                         double delta, double q, double mass) {
  PotentialParams p{v0, s0, a, q, delta, mass, CouplingLimit::General};
  p.validate();
  return p;
}

void PotentialParams::validate() const {
  if (!(delta > 0.0)) throw std::invalid_argument("screening delta must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
  if (!(q > 0.0) || q > 1.0)
    throw std::invalid_argument("deformation q must lie in (0, 1]");
  if (!std::isfinite(v0) || !std::isfinite(s0) || !std::isfinite(a))
    throw std::invalid_argument("potential parameters must be finite");
}

bool PotentialParams::greene_aldrich_valid(double r) const {
  return delta * r < 1.0 && q > 0.9;
}

double QuantumNumbers::gamma() const { return centrifugal_gamma(dim, l); }

double centrifugal_gamma(int dim, int l) {
  const double s = static_cast<double>(dim) + 2.0 * static_cast<double>(l);
  return (s - 1.0) * (s - 3.0) / 4.0;
}

namespace {

double screening_fraction(double r, double E, const PotentialParams& p) {
  const double ex = std::exp(-p.delta * r);
  const double den = 1.0 - p.q * ex;
  if (std::abs(den) < 1e-300)
    throw PoleError("screening denominator vanished");
  return (1.0 + p.a * E) * ex / den;
}

}  // namespace

double vector_potential(double r, double E, const PotentialParams& p) {
  return -p.v0 * screening_fraction(r, E, p);
}

double scalar_potential(double r, double E, const PotentialParams& p) {
  return -p.s0 * screening_fraction(r, E, p);
}

double greene_aldrich_centrifugal(double r, double delta, double q) {
  const double ex = std::exp(-delta * r);
  const double den = 1.0 - q * ex;
  if (std::abs(den) < 1e-300)
    throw PoleError("screening denominator vanished");
  const double f = delta * ex / den;
  return f * f;
}

}  // namespace kgh
