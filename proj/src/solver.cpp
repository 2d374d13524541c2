#include "rootlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rootlab/errors.hpp"

namespace rootlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxPolishSweeps = 50;

// splitmix64 keeps the seed -> offset mapping identical on every platform.
double unit_from_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::vector<bool> cluster_flags(const std::vector<Complex>& z, double radius) {
  std::vector<bool> flags(z.size(), false);
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      if (std::abs(z[j] - z[k]) < radius) flags[j] = flags[k] = true;
    }
  }
  return flags;
}

struct Assessment {
  bool ok = true;
  double worst = 0.0;
};

Assessment assess(const MonicPoly& p, const std::vector<Complex>& z,
                  const SolveControls& c, double cluster_radius) {
  const auto flags = cluster_flags(z, cluster_radius);
  const double loose = std::sqrt(c.tol);
  Assessment a;
  for (std::size_t k = 0; k < z.size(); ++k) {
    double r = residual(p, z[k]);
    double target = std::max(flags[k] ? loose : c.tol, rounding_floor(p, z[k]));
    a.worst = std::max(a.worst, r);
    if (!(r <= target)) a.ok = false;
  }
  return a;
}

// One Gauss-Seidel Aberth sweep; returns the largest correction applied.
double aberth_sweep(const MonicPoly& p, std::vector<Complex>& z, double tol) {
  double max_corr = 0.0;
  const std::size_t n = z.size();
  for (std::size_t k = 0; k < n; ++k) {
    Complex v, d;
    evaluate_with_derivative(p, z[k], v, d);
    if (v == Complex(0.0)) continue;
    if (std::abs(d) < 1e-300) {
      z[k] += Complex(tol, tol);
      continue;
    }
    Complex ratio = v / d;
    Complex sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      Complex diff = z[k] - z[j];
      if (diff == Complex(0.0)) diff = Complex(kEps, kEps) * (1.0 + std::abs(z[k]));
      sum += 1.0 / diff;
    }
    Complex denom = 1.0 - ratio * sum;
    Complex corr = (std::abs(denom) < 1e-300) ? ratio : ratio / denom;
    if (!is_finite(corr)) corr = ratio;
    z[k] -= corr;
    max_corr = std::max(max_corr, std::abs(corr));
  }
  return max_corr;
}

}  // namespace

void SolveControls::validate() const {
  if (!(tol >= 1e-14) || !std::isfinite(tol)) {
    throw InvalidInput("solver tolerance must be >= 1e-14");
  }
  if (max_iter < 1) throw InvalidInput("solver max_iter must be >= 1");
}

double rounding_floor(const MonicPoly& p, Complex z) {
  const auto& a = p.coeffs();
  const double az = std::abs(z);
  double bound = 0.0;
  double pw = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    bound += std::abs(a[k]) * pw;
    pw *= az;
  }
  bound += pw;  // leading term
  const double n = static_cast<double>(a.size());
  return 8.0 * n * kEps * bound / (1.0 + p.coeff_scale());
}

RootMultiset refine_all(const MonicPoly& p, std::vector<Complex> z,
                        const SolveControls& c) {
  c.validate();
  const std::size_t n = p.degree();
  if (z.size() != n) throw InvalidInput("guess count must equal degree");
  for (const auto& g : z) {
    if (!is_finite(g)) throw InvalidInput("non-finite initial guess");
  }
  const double cluster_radius = std::sqrt(c.tol);

  if (n == 1) {
    RootMultiset out;
    out.roots = {-p[0]};
    out.clustered = {false};
    out.cluster_radius = cluster_radius;
    return out;
  }

  int iter = 0;
  Assessment a = assess(p, z, c, cluster_radius);
  while (!a.ok && iter < c.max_iter) {
    aberth_sweep(p, z, c.tol);
    ++iter;
    a = assess(p, z, c, cluster_radius);
  }
  if (!a.ok) throw NoConvergence(iter, a.worst);

  // Keep sweeping while corrections still shrink; this pulls simple roots to
  // full precision and lets multiple roots collapse into a tight cluster.
  const std::vector<Complex> accepted = z;
  double prev = std::numeric_limits<double>::infinity();
  for (int s = 0; s < kMaxPolishSweeps; ++s) {
    std::vector<Complex> before = z;
    double corr = aberth_sweep(p, z, c.tol);
    double zmax = 0.0;
    for (const auto& r : z) zmax = std::max(zmax, std::abs(r));
    if (!(corr < prev)) {
      z = std::move(before);
      break;
    }
    prev = corr;
    if (corr <= 4.0 * kEps * (1.0 + zmax)) break;
  }
  if (!assess(p, z, c, cluster_radius).ok) z = accepted;

  RootMultiset out;
  out.roots = std::move(z);
  out.clustered = cluster_flags(out.roots, cluster_radius);
  out.cluster_radius = cluster_radius;
  return out;
}

RootMultiset solve_all(const MonicPoly& p, const SolveControls& c) {
  c.validate();
  const std::size_t n = p.degree();
  const double radius = 1.0 + p.coeff_scale();
  const double two_pi = 2.0 * std::numbers::pi;
  const double offset =
      0.4 + two_pi * unit_from_seed(c.seed) / static_cast<double>(n);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, offset + two_pi * static_cast<double>(k) /
                                           static_cast<double>(n));
  }
  return refine_all(p, std::move(z), c);
}

PolishResult polish(const MonicPoly& p, Complex z0, const SolveControls& c) {
  c.validate();
  if (!is_finite(z0)) throw InvalidInput("non-finite starting point");
  PolishResult best{z0, residual(p, z0), 0, false};
  Complex z = z0;
  for (int it = 1; it <= c.max_iter; ++it) {
    if (best.residual <= std::max(c.tol, rounding_floor(p, best.value))) break;
    Complex v, d;
    evaluate_with_derivative(p, z, v, d);
    if (std::abs(d) < 1e-30) {
      z += c.tol;
      continue;
    }
    z -= v / d;
    if (!is_finite(z)) break;
    double r = residual(p, z);
    if (r < best.residual) best = PolishResult{z, r, it, false};
  }
  best.converged = best.residual <= std::max(c.tol, rounding_floor(p, best.value));
  return best;
}

}  // namespace rootlab
