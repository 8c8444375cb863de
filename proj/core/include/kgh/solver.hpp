#ifndef KGH_SOLVER_HPP
#define KGH_SOLVER_HPP

#include <vector>

#include "kgh/model.hpp"
#include "kgh/quantization.hpp"

namespace kgh {

struct RootFindConfig {
  int scan_points = 20001;       // uniform grid over (-m, m)
  double e_margin = 1e-9;        // exclusion band at E = +-m, in units of m
  double tol_residual = 1e-12;
  double tol_step = 1e-12;
  int max_newton_iters = 60;
  double pole_guard = 1e-9;      // guard band on |Sigma - n|
  int edge_points = 500;         // extra log-spaced points near each of +-m
  double edge_span = 5e-2;       // reach of the edge refinement, units of m
  double stall_tol = 4e-3;       // |f| threshold for near-root stationary points
  int threads = 0;               // 0 = hardware concurrency

  void validate() const;  // throws std::invalid_argument
};

struct Bracket {
  double lo = 0.0, hi = 0.0;
};

struct RootDiagnostics {
  int iterations = 0;
  double residual = 0.0;
  bool used_bisection = false;
};

// Stationary point of f with small but nonzero |f|: no eigenvalue exists
// there, but a Newton iteration started nearby converges to it and several
// published reference values are exactly such points. Kept separate from
// roots so the root invariants stay strict.
struct StallPoint {
  double energy = 0.0;
  double residual = 0.0;
};

struct SpectrumEntry {
  int n = 0, l = 0, dim = 3;
  std::vector<double> roots;               // strictly increasing, |f| <= tol
  std::vector<RootDiagnostics> diagnostics;
  std::vector<StallPoint> stalls;
  bool none_marker = true;                 // true iff roots empty
};

struct Spectrum {
  PotentialParams params;
  int dim = 3;
  std::vector<SpectrumEntry> entries;
  RootFindConfig config;                   // provenance snapshot
  // Radial index convention: the reference dataset labels rows n = 1, 2, ...
  // and those labels feed the energy relation unchanged; calibrated against
  // the D=3 EMES ground row.
  static constexpr const char* index_convention = "n-as-printed";
};

// Uniform grid plus log-refined bands near +-m; sorted, deduplicated.
std::vector<double> scan_grid(double mass, const RootFindConfig& cfg);

// Sign-change brackets of f between consecutive evaluable grid points.
std::vector<Bracket> scan_and_bracket(int n, const QuantumNumbers& qn,
                                      const PotentialParams& p,
                                      const RootFindConfig& cfg);

// Newton from E0 inside the bracket, bisection fallback when the step exits
// the bracket, the derivative degenerates or a point is not evaluable.
double newton_polish(double e0, const Bracket& bracket, int n,
                     const QuantumNumbers& qn, const PotentialParams& p,
                     const RootFindConfig& cfg,
                     RootDiagnostics* diag = nullptr);

// Pure bisection on the bracket, used as the independent cross-check.
double bisect_root(const Bracket& bracket, int n, const QuantumNumbers& qn,
                   const PotentialParams& p, const RootFindConfig& cfg);

// Roots plus stall points for one (n, l) cell.
SpectrumEntry solve_cell(int n, int l, int dim, const PotentialParams& p,
                         const RootFindConfig& cfg);

// All cells n in [1, n_max], l in [0, l_max]; cells run in parallel and are
// merged in (n, l) order.
Spectrum solve_spectrum(int dim, int n_max, int l_max,
                        const PotentialParams& p, const RootFindConfig& cfg);

// Same, for an explicit list of (n, l) cells (high-l runs, triangular tables).
Spectrum solve_spectrum_cells(int dim, const std::vector<std::pair<int, int>>& nl,
                              const PotentialParams& p, const RootFindConfig& cfg);

// Re-scan with a denser grid; the anti-missed-root oracle.
std::vector<double> root_census(int n, const QuantumNumbers& qn,
                                const PotentialParams& p,
                                const RootFindConfig& cfg, int refine_factor);

}  // namespace kgh

#endif
