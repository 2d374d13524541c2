#include "rootlab/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rootlab/assignment.hpp"
#include "rootlab/errors.hpp"

namespace rootlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimum separation ignoring pairs marked in `exempt` (n*n, row-major).
double guarded_separation(const std::vector<Complex>& z, const std::vector<bool>* exempt) {
  double m = kInf;
  const std::size_t n = z.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (exempt && (*exempt)[j * n + k]) continue;
      m = std::min(m, std::abs(z[j] - z[k]));
    }
  }
  return m;
}

void record_point(TrajectoryBundle& b, const CoefficientPath& path, double t,
                  std::vector<Complex> roots, std::vector<std::size_t> prov) {
  const MonicPoly p = path.at(t);
  for (const auto& r : roots) b.rho_max = std::max(b.rho_max, residual(p, r));
  b.factorization_defect = std::max(
      b.factorization_defect, coeff_distance(from_roots(roots).coeffs(), p.coeffs()));
  b.s_min = std::min(b.s_min, min_pairwise_distance(roots));
  b.grid.push_back(t);
  b.roots.push_back(std::move(roots));
  b.provenance.push_back(std::move(prov));
}

}  // namespace

void TrackControls::validate(double length) const {
  const double h = initial_step(length);
  const double hm = min_step(length);
  if (!(hm > 0.0 && hm <= h && h <= length)) {
    throw InvalidInput("track controls need 0 < h_min <= h0 <= beta - alpha");
  }
  if (!(eps_cont > 0.0)) throw InvalidInput("eps_cont must be positive");
  if (!(guard >= 2.0)) throw InvalidInput("guard factor must be >= 2");
  solver.validate();
}

TrajectoryBundle track(const CoefficientPath& path, const TrackControls& c,
                       std::optional<std::vector<Complex>> initial) {
  const double alpha = path.alpha();
  const double beta = path.beta();
  const double length = beta - alpha;
  c.validate(length);
  const double h_min = c.min_step(length);
  const double h0 = c.initial_step(length);
  const std::size_t n = path.degree();

  std::vector<Complex> current;
  if (initial) {
    if (initial->size() != n) throw InvalidInput("initial ordering has wrong size");
    current = std::move(*initial);
  } else {
    current = solve_all(path.at(alpha), c.solver).roots;
  }

  // Coincident roots at the start may be labelled arbitrarily.
  const double cluster_radius = std::sqrt(c.solver.tol);
  std::vector<bool> exempt(n * n, false);
  bool any_exempt = false;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (std::abs(current[j] - current[k]) < cluster_radius) {
        exempt[j * n + k] = true;
        any_exempt = true;
      }
    }
  }

  TrajectoryBundle b;
  b.s_min = kInf;
  std::vector<std::size_t> ident(n);
  for (std::size_t k = 0; k < n; ++k) ident[k] = k;
  record_point(b, path, alpha, current, ident);

  double t = alpha;
  double h = h0;
  bool at_start = true;
  while (t < beta) {
    double h_try = std::min(h, beta - t);
    double t_new = t + h_try;
    if (beta - t_new <= 1e-12 * length) {
      t_new = beta;
      h_try = beta - t;
    }
    const MonicPoly p = path.at(t_new);
    const RootMultiset sol = solve_all(p, c.solver);
    const auto assign = match_roots(current, sol.roots);

    std::vector<Complex> next(n);
    double disp = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      next[k] = sol.roots[assign[k]];
      disp = std::max(disp, std::abs(next[k] - current[k]));
    }
    const bool use_exempt = at_start && any_exempt;
    const double sep_prev = guarded_separation(current, use_exempt ? &exempt : nullptr);
    bool ok = disp <= c.eps_cont && disp < sep_prev / c.guard;

    // The Newton continuation of each previous root must land on the root
    // the matching picked for it.
    if (ok && !use_exempt) {
      const double sep_new = min_pairwise_distance(next);
      for (std::size_t k = 0; k < n && ok; ++k) {
        const PolishResult pr = polish(p, current[k], c.solver);
        if (!(std::abs(pr.value - next[k]) < sep_new / 2.0)) ok = false;
      }
    }

    if (!ok) {
      ++b.rejected_steps;
      if (h_try / 2.0 < h_min) throw StepUnderflow(t);
      h = h_try / 2.0;
      continue;
    }
    b.delta_max = std::max(b.delta_max, disp);
    record_point(b, path, t_new, next, assign);
    current = std::move(next);
    t = t_new;
    at_start = false;
    h = std::min(h0, 2.0 * h_try);
  }
  return b;
}

bool RoundTrip::identity() const {
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    if (permutation[k] != k) return false;
  }
  return true;
}

RoundTrip round_trip(const CoefficientPath& path, const TrackControls& c) {
  RoundTrip rt;
  rt.forward = track(path, c);
  rt.backward = track(path.reversed(), c, rt.forward.final());
  rt.permutation = match_roots(rt.backward.final(), rt.forward.initial());
  for (std::size_t k = 0; k < rt.permutation.size(); ++k) {
    rt.closure_error = std::max(
        rt.closure_error, std::abs(rt.backward.final()[k] - rt.forward.initial()[rt.permutation[k]]));
  }
  return rt;
}

LocalSelectionReport local_selection(std::span<const Complex> m0, FieldTag field,
                                     double radius, int samples, const TrackControls& c,
                                     std::span<const double> ladder) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidInput("radius must be >= 0");
  if (samples < 1) throw InvalidInput("local selection needs samples >= 1");
  std::vector<Complex> base_coeffs(m0.begin(), m0.end());
  const MonicPoly base(base_coeffs, field);

  LocalSelectionReport rep;
  rep.base_roots = solve_all(base, c.solver).roots;
  if (ladder.empty()) {
    rep.radii = {radius, radius / 2.0, radius / 4.0, radius / 8.0};
  } else {
    rep.radii.assign(ladder.begin(), ladder.end());
  }

  const std::size_t n = base_coeffs.size();
  const std::size_t dim = field == FieldTag::Real ? n : 2 * n;
  std::mt19937_64 rng(c.solver.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (double r : rep.radii) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      // Uniform point of the dim-ball of radius r.
      std::vector<double> dir(dim);
      double norm = 0.0;
      for (auto& x : dir) {
        x = normal(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      const double scale = norm > 0.0 ? r * std::pow(unit(rng), 1.0 / dim) / norm : 0.0;
      std::vector<Complex> m = base_coeffs;
      for (std::size_t k = 0; k < n; ++k) {
        if (field == FieldTag::Real) {
          m[k] += scale * dir[k];
        } else {
          m[k] += Complex(scale * dir[2 * k], scale * dir[2 * k + 1]);
        }
      }
      const auto roots = solve_all(MonicPoly(m, field), c.solver).roots;
      const auto assign = match_roots(rep.base_roots, roots);
      for (std::size_t k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(roots[assign[k]] - rep.base_roots[k]));
      }
    }
    rep.deltas.push_back(worst);
  }
  return rep;
}

}  // namespace rootlab
