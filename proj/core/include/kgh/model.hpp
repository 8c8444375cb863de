#ifndef KGH_MODEL_HPP
#define KGH_MODEL_HPP

#include <string>

namespace kgh {

enum class CouplingLimit { General, EMES, EMOS, PureVector, PureScalar };

const char* to_string(CouplingLimit limit);

// Physical configuration of the energy-dependent deformed Hulthen well.
// Depths are stored signed; the limit tag records which convenience
// constructor was used and is not a separate representation.
struct PotentialParams {
  double v0 = 2.0;     // vector depth, enters with a minus sign (well)
  double s0 = 2.0;     // scalar depth, may be negative
  double a = 0.0;      // energy slope, potential scales with (1 + a E)
  double q = 1.0;      // deformation, 0 < q <= 1
  double delta = 0.01; // screening, > 0
  double mass = 1.0;   // rest mass, > 0
  CouplingLimit limit = CouplingLimit::General;

  static PotentialParams emes(double depth, double a, double delta,
                              double q = 1.0, double mass = 1.0);
  static PotentialParams emos(double depth, double a, double delta,
                              double q = 1.0, double mass = 1.0);
  static PotentialParams pure_vector(double v0, double a, double delta,
                                     double q = 1.0, double mass = 1.0);
  static PotentialParams pure_scalar(double s0, double a, double delta,
                                     double q = 1.0, double mass = 1.0);
  static PotentialParams general(double v0, double s0, double a, double delta,
                                 double q = 1.0, double mass = 1.0);

  // throws std::invalid_argument when delta <= 0, mass <= 0 or q outside (0, 1]
  void validate() const;

  // The centrifugal replacement is built for delta*r < 1 with q near one.
  bool greene_aldrich_valid(double r) const;
};

struct QuantumNumbers {
  int n = 1;   // radial index as used by the energy relation
  int l = 0;   // angular momentum
  int dim = 3; // spatial dimension D >= 1

  double gamma() const;
};

// (D+2l-1)(D+2l-3)/4
double centrifugal_gamma(int dim, int l);

// -V0 (1+aE) e^{-delta r} / (1 - q e^{-delta r}); throws PoleError at the
// (unphysical for q <= 1, r > 0) pole of the screening denominator.
double vector_potential(double r, double E, const PotentialParams& p);
double scalar_potential(double r, double E, const PotentialParams& p);

// delta^2 e^{-2 delta r} / (1 - q e^{-delta r})^2, the 1/r^2 stand-in.
double greene_aldrich_centrifugal(double r, double delta, double q);

}  // namespace kgh

#endif
