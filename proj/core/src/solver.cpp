#include "kgh/solver.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace kgh {

void RootFindConfig::validate() const {
  if (scan_points < 3) throw std::invalid_argument("scan_points must be >= 3");
  if (!(tol_residual > 0.0) || !(tol_step > 0.0) || !(pole_guard > 0.0) ||
      !(e_margin > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (edge_points < 0) throw std::invalid_argument("edge_points must be >= 0");
}

std::vector<double> scan_grid(double mass, const RootFindConfig& cfg) {
  std::vector<double> g;
  g.reserve(static_cast<size_t>(cfg.scan_points) + 2 * cfg.edge_points);
  const double lo = -mass + cfg.e_margin * mass;
  const double hi = mass - cfg.e_margin * mass;
  const double step = (hi - lo) / (cfg.scan_points - 1);
  for (int i = 0; i < cfg.scan_points; ++i) g.push_back(lo + i * step);
  if (cfg.edge_points > 0) {
    // log-spaced distances from the end points; several reference rows sit
    // within 1e-5 of |E| = m, far below the uniform spacing
    const double u0 = cfg.e_margin * mass;
    const double u1 = cfg.edge_span * mass;
    const double ratio = std::pow(u1 / u0, 1.0 / (cfg.edge_points - 1));
    double u = u0;
    for (int i = 0; i < cfg.edge_points; ++i, u *= ratio) {
      g.push_back(-mass + u);
      g.push_back(mass - u);
    }
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

namespace {

using detail::residual_weak;

std::vector<Bracket> brackets_on_grid(const std::vector<double>& grid, int n,
                                      const QuantumNumbers& qn,
                                      const PotentialParams& p,
                                      const RootFindConfig& cfg) {
  std::vector<Bracket> out;
  std::optional<double> prev;
  double prev_e = 0.0;
  for (double e : grid) {
    const auto f = residual_weak(e, n, qn, p, cfg.pole_guard);
    if (f && prev && *prev * *f < 0.0) out.push_back({prev_e, e});
    if (f) {
      prev = f;
      prev_e = e;
    } else {
      prev.reset();
    }
  }
  return out;
}

// Stationary points of f with |f| <= stall_tol and no sign change: refine the
// three-point pattern |f(mid)| < |f(left)|, |f(right)| by ternary search.
std::vector<StallPoint> stalls_on_grid(const std::vector<double>& grid, int n,
                                       const QuantumNumbers& qn,
                                       const PotentialParams& p,
                                       const RootFindConfig& cfg) {
  std::vector<StallPoint> out;
  std::vector<std::optional<double>> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    vals[i] = residual_weak(grid[i], n, qn, p, cfg.pole_guard);
  for (size_t i = 1; i + 1 < grid.size(); ++i) {
    const auto &f0 = vals[i - 1], &f1 = vals[i], &f2 = vals[i + 1];
    if (!f0 || !f1 || !f2) continue;
    if (*f0 * *f1 <= 0.0 || *f1 * *f2 <= 0.0) continue;  // bracket, not stall
    if (std::abs(*f1) >= std::abs(*f0) || std::abs(*f1) >= std::abs(*f2))
      continue;
    double lo = grid[i - 1], hi = grid[i + 1];
    for (int it = 0; it < 220 && hi - lo > 1e-15; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const auto a = residual_weak(m1, n, qn, p, cfg.pole_guard);
      const auto b = residual_weak(m2, n, qn, p, cfg.pole_guard);
      if (!a || !b) break;
      if (std::abs(*a) < std::abs(*b))
        hi = m2;
      else
        lo = m1;
    }
    const double em = 0.5 * (lo + hi);
    const auto fm = residual_weak(em, n, qn, p, cfg.pole_guard);
    if (fm && std::abs(*fm) <= cfg.stall_tol)
      out.push_back({em, std::abs(*fm)});
  }
  return out;
}

}  // namespace

std::vector<Bracket> scan_and_bracket(int n, const QuantumNumbers& qn,
                                      const PotentialParams& p,
                                      const RootFindConfig& cfg) {
  cfg.validate();
  return brackets_on_grid(scan_grid(p.mass, cfg), n, qn, p, cfg);
}

double bisect_root(const Bracket& bracket, int n, const QuantumNumbers& qn,
                   const PotentialParams& p, const RootFindConfig& cfg) {
  double lo = bracket.lo, hi = bracket.hi;
  auto flo = residual_weak(lo, n, qn, p, cfg.pole_guard);
  auto fhi = residual_weak(hi, n, qn, p, cfg.pole_guard);
  if (!flo || !fhi || *flo * *fhi > 0.0)
    throw ConvergenceError("bracket does not enclose a sign change", n, qn.l);
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto fm = residual_weak(mid, n, qn, p, cfg.pole_guard);
    if (!fm) break;  // both ends evaluable, keep the smaller half
    if (*flo * *fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_polish(double e0, const Bracket& bracket, int n,
                     const QuantumNumbers& qn, const PotentialParams& p,
                     const RootFindConfig& cfg, RootDiagnostics* diag) {
  double lo = bracket.lo, hi = bracket.hi;
  auto flo = residual_weak(lo, n, qn, p, cfg.pole_guard);
  auto fhi = residual_weak(hi, n, qn, p, cfg.pole_guard);
  const bool have_bracket = flo && fhi && *flo * *fhi < 0.0;

  double e = e0;
  auto fe = residual_weak(e, n, qn, p, cfg.pole_guard);
  if (!fe) {
    if (!have_bracket)
      throw ConvergenceError("start point not evaluable", n, qn.l);
    e = 0.5 * (lo + hi);
    fe = residual_weak(e, n, qn, p, cfg.pole_guard);
  }

  int iters = 0;
  bool bisected = false;
  for (; iters < cfg.max_newton_iters; ++iters) {
    if (fe && std::abs(*fe) <= cfg.tol_residual) break;

    double step = std::nan("");
    if (fe) {
      const double h = std::max(1e-8, 1e-8 * std::abs(e));
      const auto fp = residual_weak(e + h, n, qn, p, cfg.pole_guard);
      const auto fm = residual_weak(e - h, n, qn, p, cfg.pole_guard);
      if (fp && fm) {
        const double df = (*fp - *fm) / (2.0 * h);
        if (std::abs(df) > 1e-14) step = -*fe / df;
      }
    }

    double enext = e + step;
    bool step_ok = std::isfinite(step) &&
                   (!have_bracket || (enext > lo && enext < hi));
    auto fn = step_ok ? residual_weak(enext, n, qn, p, cfg.pole_guard)
                      : std::nullopt;
    if (!fn) {
      if (!have_bracket)
        throw ConvergenceError("newton step failed without a bracket", n, qn.l);
      enext = 0.5 * (lo + hi);  // bisection fallback
      fn = residual_weak(enext, n, qn, p, cfg.pole_guard);
      bisected = true;
      if (!fn)
        throw ConvergenceError("iterate left the validity domain", n, qn.l);
    }

    if (have_bracket) {
      if (*flo * *fn <= 0.0) {
        hi = enext;
        fhi = fn;
      } else {
        lo = enext;
        flo = fn;
      }
    }
    const double de = std::abs(enext - e);
    e = enext;
    fe = fn;
    if (de <= cfg.tol_step * std::max(1.0, std::abs(e))) break;
  }

  if (!fe || std::abs(*fe) > cfg.tol_residual) {
    // fall back to full bisection before giving up
    if (have_bracket) {
      e = bisect_root({lo, hi}, n, qn, p, cfg);
      fe = residual_weak(e, n, qn, p, cfg.pole_guard);
      bisected = true;
    }
    if ((!fe || std::abs(*fe) > cfg.tol_residual) && (hi - lo) > cfg.tol_step)
      throw ConvergenceError("root polish did not converge", n, qn.l);
  }
  if (diag) {
    diag->iterations = iters;
    diag->residual = fe ? std::abs(*fe) : std::nan("");
    diag->used_bisection = bisected;
  }
  return e;
}

SpectrumEntry solve_cell(int n, int l, int dim, const PotentialParams& p,
                         const RootFindConfig& cfg) {
  const QuantumNumbers qn{n, l, dim};
  SpectrumEntry entry;
  entry.n = n;
  entry.l = l;
  entry.dim = dim;

  const auto grid = scan_grid(p.mass, cfg);
  for (const Bracket& b : brackets_on_grid(grid, n, qn, p, cfg)) {
    RootDiagnostics diag;
    const double r = newton_polish(0.5 * (b.lo + b.hi), b, n, qn, p, cfg, &diag);
    entry.roots.push_back(r);
    entry.diagnostics.push_back(diag);
  }
  // sort, deduplicate within 1e-9
  std::vector<size_t> order(entry.roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return entry.roots[a] < entry.roots[b];
  });
  SpectrumEntry dedup = entry;
  dedup.roots.clear();
  dedup.diagnostics.clear();
  for (size_t idx : order) {
    if (!dedup.roots.empty() &&
        std::abs(entry.roots[idx] - dedup.roots.back()) < 1e-9)
      continue;
    dedup.roots.push_back(entry.roots[idx]);
    dedup.diagnostics.push_back(entry.diagnostics[idx]);
  }
  dedup.stalls = stalls_on_grid(grid, n, qn, p, cfg);
  dedup.none_marker = dedup.roots.empty();
  return dedup;
}

namespace {

template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
  unsigned int hw = threads > 0 ? static_cast<unsigned int>(threads)
                                : std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  hw = std::min<unsigned int>(hw, static_cast<unsigned int>(count ? count : 1));
  if (hw <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(hw);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (unsigned int t = 0; t < hw; ++t) {
    pool.emplace_back([&, t] {
      for (size_t i = t; i < count; i += hw) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

Spectrum solve_spectrum_cells(int dim,
                              const std::vector<std::pair<int, int>>& nl,
                              const PotentialParams& p,
                              const RootFindConfig& cfg) {
  cfg.validate();
  p.validate();
  if (nl.empty()) throw std::invalid_argument("empty (n, l) range");
  Spectrum spec;
  spec.params = p;
  spec.dim = dim;
  spec.config = cfg;
  spec.entries.resize(nl.size());
  parallel_for(nl.size(), cfg.threads, [&](size_t i) {
    spec.entries[i] = solve_cell(nl[i].first, nl[i].second, dim, p, cfg);
  });
  return spec;
}

Spectrum solve_spectrum(int dim, int n_max, int l_max,
                        const PotentialParams& p, const RootFindConfig& cfg) {
  if (n_max < 1 || l_max < 0)
    throw std::invalid_argument("need n_max >= 1 and l_max >= 0");
  std::vector<std::pair<int, int>> nl;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l <= l_max; ++l) nl.emplace_back(n, l);
  return solve_spectrum_cells(dim, nl, p, cfg);
}

std::vector<double> root_census(int n, const QuantumNumbers& qn,
                                const PotentialParams& p,
                                const RootFindConfig& cfg, int refine_factor) {
  if (refine_factor < 2)
    throw std::invalid_argument("refine_factor must be >= 2");
  RootFindConfig dense = cfg;
  dense.scan_points = cfg.scan_points * refine_factor;
  dense.edge_points = cfg.edge_points * refine_factor;
  std::vector<double> roots;
  for (const Bracket& b : scan_and_bracket(n, qn, p, dense))
    roots.push_back(newton_polish(0.5 * (b.lo + b.hi), b, n, qn, p, dense));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              roots.end());
  return roots;
}

}  // namespace kgh
