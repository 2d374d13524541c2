#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rootlab/poly.hpp"

namespace rootlab {

struct SolveControls {
  double tol = 1e-12;  // relative residual target
  int max_iter = 200;
  std::uint64_t seed = 0;

  // Throws InvalidInput unless tol >= 1e-14 and max_iter >= 1.
  void validate() const;
};

// All n roots by Aberth-Ehrlich simultaneous iteration. Initial guesses are
// equispaced on the circle of radius 1 + max|a_k|, rotated by a seed-dependent
// offset. Roots closer than sqrt(tol) to another root are flagged clustered
// and only need to meet a residual of sqrt(tol). Throws NoConvergence.
RootMultiset solve_all(const MonicPoly& p, const SolveControls& c = {});

// Aberth-Ehrlich from caller-supplied starting points (same stopping rules).
RootMultiset refine_all(const MonicPoly& p, std::vector<Complex> guesses,
                        const SolveControls& c = {});

struct PolishResult {
  Complex value;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Newton iteration from z0. Returns the best iterate; `converged` reports
// whether residual <= tol was reached.
PolishResult polish(const MonicPoly& p, Complex z0, const SolveControls& c = {});

// Residual floor of Horner evaluation at z in double precision, on the same
// relative scale as residual().
double rounding_floor(const MonicPoly& p, Complex z);

}  // namespace rootlab
