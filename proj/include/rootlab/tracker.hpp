#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rootlab/path.hpp"
#include "rootlab/poly.hpp"
#include "rootlab/solver.hpp"

namespace rootlab {

struct TrackControls {
  // Unset step sizes resolve to (beta - alpha)/256 and (beta - alpha)*1e-6.
  std::optional<double> h0;
  std::optional<double> h_min;
  double eps_cont = 0.1;  // largest admissible root displacement per step
  double guard = 4.0;     // displacement must stay below separation / guard
  SolveControls solver;

  double initial_step(double length) const { return h0.value_or(length / 256.0); }
  double min_step(double length) const { return h_min.value_or(length * 1e-6); }
  void validate(double length) const;
};

// n continuous root trajectories sampled on an adaptive grid.
struct TrajectoryBundle {
  std::vector<double> grid;
  std::vector<std::vector<Complex>> roots;  // roots[j][k]: trajectory k at grid[j]
  // provenance[j][k]: index into the solver's output at grid[j] that was
  // assigned to trajectory k (the identity at grid[0]).
  std::vector<std::vector<std::size_t>> provenance;
  double delta_max = 0.0;             // largest per-step displacement
  double rho_max = 0.0;               // largest relative residual
  double s_min = 0.0;                 // smallest pairwise separation on the grid
  double factorization_defect = 0.0;  // max |from_roots(roots) - path coeffs|
  int rejected_steps = 0;

  std::size_t degree() const { return roots.empty() ? 0 : roots.front().size(); }
  const std::vector<Complex>& initial() const { return roots.front(); }
  const std::vector<Complex>& final() const { return roots.back(); }
};

// Tracks every root of `path` from alpha to beta. The initial ordering is the
// solver's output at alpha unless `initial` is given. A starting point with a
// multiple root is accepted (any labelling of coincident roots is
// continuous); anywhere else the step is halved until the displacement is
// below separation/guard and eps_cont, and StepUnderflow is thrown once the
// step would drop below h_min.
TrajectoryBundle track(const CoefficientPath& path, const TrackControls& c = {},
                       std::optional<std::vector<Complex>> initial = std::nullopt);

struct RoundTrip {
  TrajectoryBundle forward;
  TrajectoryBundle backward;
  // permutation[k]: index of forward.initial() matched to backward.final()[k].
  std::vector<std::size_t> permutation;
  double closure_error = 0.0;  // max matched distance
  bool identity() const;
};

// Tracks alpha -> beta, then beta -> alpha starting from the final ordering.
RoundTrip round_trip(const CoefficientPath& path, const TrackControls& c = {});

struct LocalSelectionReport {
  std::vector<Complex> base_roots;
  std::vector<double> radii;
  std::vector<double> deltas;  // deltas[i]: max matched displacement within radii[i]
};

// Solves at m0 and, for each radius of the ladder, at `samples` random points
// of the ball of that radius around m0 (real perturbations for a real field).
// Roots are assigned to the m0 ordering by minimal matching. An empty ladder
// means {r, r/2, r/4, r/8}.
LocalSelectionReport local_selection(std::span<const Complex> m0, FieldTag field,
                                     double radius, int samples,
                                     const TrackControls& c = {},
                                     std::span<const double> ladder = {});

}  // namespace rootlab
