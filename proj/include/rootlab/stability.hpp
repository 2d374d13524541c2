#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rootlab/holder.hpp"
#include "rootlab/poly.hpp"
#include "rootlab/solver.hpp"

// Spectral abscissa and exponential-polynomial bounds for
//   w^(n) = a_{n-1} w^(n-1) + ... + a_1 w' + a_0 w.
namespace rootlab::stability {

// Characteristic polynomial of the ODE with coefficient tuple M:
//   lambda^n - a_{n-1} lambda^{n-1} - ... - a_1 lambda - a_0,
// i.e. the monic polynomial with c_k = -a_k. All sign handling lives here.
class CharPoly {
 public:
  explicit CharPoly(std::vector<Complex> source);

  const std::vector<Complex>& source() const noexcept { return source_; }
  std::vector<Complex> char_coeffs() const;
  MonicPoly monic() const;

 private:
  std::vector<Complex> source_;
};

std::vector<Complex> to_complex(std::span<const double> m);

// max Re(lambda) over the characteristic roots.
double lambda_bar(std::span<const Complex> m, const SolveControls& c = {});

struct HurwitzResult {
  bool stable = false;
  std::vector<double> minors;  // leading principal minors, size n
};

// Hurwitz matrix of lambda^n + c_{n-1} lambda^{n-1} + ... + c_0 (c_k = -a_k).
std::vector<std::vector<double>> hurwitz_matrix(std::span<const double> m);

// Stable iff every leading principal minor is > 0. Throws InvalidInput for
// complex coefficients.
HurwitzResult hurwitz_stable(std::span<const Complex> m);

struct ComplexInterval {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;
};

// Per-coordinate closed intervals in C^n. Distances on boxes use the max norm.
struct DomainBox {
  std::vector<ComplexInterval> coords;

  static DomainBox real(std::vector<std::pair<double, double>> intervals);
  std::size_t dim() const noexcept { return coords.size(); }
  bool is_real() const;
  void validate() const;  // throws InvalidInput on empty/inverted/non-finite

  // Tensor grid with `points` nodes per nondegenerate real dimension
  // (endpoints included); degenerate intervals contribute their single value.
  std::vector<std::vector<Complex>> grid(int points) const;
};

double max_norm_distance(std::span<const Complex> a, std::span<const Complex> b);

// Largest L with |Lbar(M) - Lbar(M')| = L |M - M'|^(1/n) over `pairs` random
// pairs in the box; also runs 2*pairs and records the doubling ratio.
HolderReport lambda_bar_modulus_scan(const DomainBox& box, int pairs, std::uint64_t seed = 0);

struct ExponentFit {
  double exponent = 0.0;  // least-squares slope of log jump vs log radius
  std::vector<double> radii;
  std::vector<double> jumps;  // max |Lbar(M0 + d) - Lbar(M0)| with |d| = radius
};

// Samples `directions` real perturbations of max-norm `radius` for each
// radius and fits the Hoelder exponent of lambda_bar at m0.
ExponentFit holder_exponent_fit(std::span<const Complex> m0, std::span<const double> radii,
                                int directions = 64);

struct IVP {
  std::vector<Complex> m;  // a_0 .. a_{n-1}
  std::vector<Complex> n;  // w(0), w'(0), ..., w^(n-1)(0)
  double xi_max = 1.0;
  double h = 1e-3;
};

struct IvpSolution {
  std::vector<double> xi;
  std::vector<std::vector<Complex>> states;  // states[j][i] = w^(i)(xi[j])
};

// Largest |lambda| over the characteristic roots.
double spectral_radius(std::span<const Complex> m, const SolveControls& c = {});

// Classical RK4 on the companion system with a fixed step. The step is
// shrunk so that it divides xi_max; StepTooLarge if h * |lambda|max > 0.1.
IvpSolution solve_ivp(const IVP& ivp);

// Same integration, streaming each grid state to `sink` instead of storing it.
void integrate(const IVP& ivp, const std::function<void(double, std::span<const Complex>)>& sink);

struct BoundGrid {
  int points_a = 5;
  int points_w = 3;
  double h = 1e-2;
  // Nested refinement: 2p - 1 nodes per dimension and half the step.
  BoundGrid refined() const { return {2 * points_a - 1, 2 * points_w - 1, h / 2.0}; }
};

struct BoundReport {
  double c_tilde = 0.0;
  std::optional<double> kappa;  // -max Lbar over the sampled M, when all are Hurwitz-stable
  bool all_hurwitz = false;
  bool decayed_bound_holds = false;
  double max_lambda_bar = 0.0;
  BoundGrid grid;
  double xi_max = 0.0;
  long samples = 0;
  int double_root_nodes = 0;  // extra M on the double-root curve (real n = 2 boxes)
  std::vector<Complex> argmax_m;
  std::vector<Complex> argmax_n;
  double argmax_xi = 0.0;
};

// ratio = max_i |w^(i)(xi)| / ((1 + xi^(n-1)) e^{Lbar(M) xi}); the report's
// c_tilde is its supremum over the grid of (M, N, xi). For a real box with
// n = 2 the M grid also gets the points of a1^2 + 4 a0 = 0 lying over its a0
// and a1 nodes, where the ratio peaks.
BoundReport verify_bound(const DomainBox& box_a, const DomainBox& box_w, const BoundGrid& grid,
                         double xi_max);

double bound_ratio(std::span<const Complex> state, double xi, double lbar);

// (xi, ratio) samples for one (M, N).
std::vector<std::pair<double, double>> ratio_surface(std::span<const Complex> m,
                                                     std::span<const Complex> n, double xi_max,
                                                     double h);

struct RasterCell {
  double a0 = 0.0;
  double a1 = 0.0;
  bool stable = false;
};

// Hurwitz stability on a grid x grid raster of a real two-dimensional box.
std::vector<RasterCell> hurwitz_raster(const DomainBox& box, int grid);

}  // namespace rootlab::stability
