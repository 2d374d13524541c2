#include "rootlab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "rootlab/errors.hpp"

namespace rootlab::stability {

namespace {

constexpr double kStepGuard = 0.1;

double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

std::vector<Complex> sample_box(const DomainBox& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> m(box.dim());
  for (std::size_t k = 0; k < box.dim(); ++k) {
    const auto& c = box.coords[k];
    const double re = c.re_lo + (c.re_hi - c.re_lo) * u(rng);
    const double im = c.im_lo + (c.im_hi - c.im_lo) * u(rng);
    m[k] = {re, im};
  }
  return m;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (lo == hi || points < 2) return {lo};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return v;
}

void check_coeffs(std::span<const Complex> m) {
  if (m.empty()) throw InvalidInput("coefficient tuple must be nonempty");
  for (const auto& a : m) {
    if (!is_finite(a)) throw InvalidInput("non-finite coefficient");
  }
}

}  // namespace

CharPoly::CharPoly(std::vector<Complex> source) : source_(std::move(source)) {
  check_coeffs(source_);
}

std::vector<Complex> CharPoly::char_coeffs() const {
  std::vector<Complex> c(source_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -source_[k];
  return c;
}

MonicPoly CharPoly::monic() const {
  auto c = char_coeffs();
  bool real = std::all_of(c.begin(), c.end(), [](Complex x) { return x.imag() == 0.0; });
  return MonicPoly(std::move(c), real ? FieldTag::Real : FieldTag::Complex);
}

std::vector<Complex> to_complex(std::span<const double> m) {
  return std::vector<Complex>(m.begin(), m.end());
}

double lambda_bar(std::span<const Complex> m, const SolveControls& c) {
  const CharPoly cp({m.begin(), m.end()});
  const auto roots = solve_all(cp.monic(), c).roots;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& r : roots) best = std::max(best, r.real());
  return best;
}

double spectral_radius(std::span<const Complex> m, const SolveControls& c) {
  const CharPoly cp({m.begin(), m.end()});
  double best = 0.0;
  for (const auto& r : solve_all(cp.monic(), c).roots) best = std::max(best, std::abs(r));
  return best;
}

std::vector<std::vector<double>> hurwitz_matrix(std::span<const double> m) {
  const std::size_t n = m.size();
  // p_0 = 1, p_k = c_{n-k} = -a_{n-k}
  auto p = [&](long k) -> double {
    if (k < 0 || k > static_cast<long>(n)) return 0.0;
    if (k == 0) return 1.0;
    return -m[n - static_cast<std::size_t>(k)];
  };
  std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h[i][j] = p(2 * static_cast<long>(j + 1) - static_cast<long>(i + 1));
    }
  }
  return h;
}

HurwitzResult hurwitz_stable(std::span<const Complex> m) {
  check_coeffs(m);
  std::vector<double> re(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k].imag() != 0.0) throw InvalidInput("Hurwitz criterion needs real coefficients");
    re[k] = m[k].real();
  }
  const auto h = hurwitz_matrix(re);
  HurwitzResult res;
  res.stable = true;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    std::vector<std::vector<double>> sub(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = h[i][j];
    }
    const double d = determinant(std::move(sub));
    res.minors.push_back(d);
    if (!(d > 0.0)) res.stable = false;
  }
  return res;
}

DomainBox DomainBox::real(std::vector<std::pair<double, double>> intervals) {
  DomainBox b;
  for (auto [lo, hi] : intervals) b.coords.push_back({lo, hi, 0.0, 0.0});
  b.validate();
  return b;
}

bool DomainBox::is_real() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const ComplexInterval& c) { return c.im_lo == 0.0 && c.im_hi == 0.0; });
}

void DomainBox::validate() const {
  if (coords.empty()) throw InvalidInput("box must have at least one coordinate");
  for (const auto& c : coords) {
    for (double x : {c.re_lo, c.re_hi, c.im_lo, c.im_hi}) {
      if (!std::isfinite(x)) throw InvalidInput("box bounds must be finite");
    }
    if (c.re_lo > c.re_hi || c.im_lo > c.im_hi) throw InvalidInput("box interval with lo > hi");
  }
}

std::vector<std::vector<Complex>> DomainBox::grid(int points) const {
  validate();
  std::vector<std::vector<Complex>> out{{}};
  for (const auto& c : coords) {
    const auto res = linspace(c.re_lo, c.re_hi, points);
    const auto ims = linspace(c.im_lo, c.im_hi, points);
    std::vector<std::vector<Complex>> next;
    next.reserve(out.size() * res.size() * ims.size());
    for (const auto& prefix : out) {
      for (double re : res) {
        for (double im : ims) {
          auto v = prefix;
          v.emplace_back(re, im);
          next.push_back(std::move(v));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

double max_norm_distance(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

HolderReport lambda_bar_modulus_scan(const DomainBox& box, int pairs, std::uint64_t seed) {
  box.validate();
  if (pairs < 1) throw InvalidInput("modulus scan needs pairs >= 1");
  const double exponent = 1.0 / static_cast<double>(box.dim());
  auto run = [&](int count, std::uint64_t s, HolderReport& rep) {
    std::mt19937_64 rng(s);
    for (int i = 0; i < count; ++i) {
      const auto x = sample_box(box, rng);
      const auto y = sample_box(box, rng);
      ++rep.samples;
      const double dist = max_norm_distance(x, y);
      if (dist == 0.0) continue;
      const double ratio = std::abs(lambda_bar(x) - lambda_bar(y)) / std::pow(dist, exponent);
      if (ratio > rep.constant) {
        rep.constant = ratio;
        rep.argmax_x.clear();
        rep.argmax_y.clear();
        for (const auto& v : x) rep.argmax_x.insert(rep.argmax_x.end(), {v.real(), v.imag()});
        for (const auto& v : y) rep.argmax_y.insert(rep.argmax_y.end(), {v.real(), v.imag()});
      }
    }
  };
  HolderReport base;
  base.exponent = exponent;
  run(pairs, seed, base);
  HolderReport doubled;
  run(2 * pairs, seed + 1, doubled);
  if (base.constant > 0.0) base.doubling_ratio = doubled.constant / base.constant;
  return base;
}

ExponentFit holder_exponent_fit(std::span<const Complex> m0, std::span<const double> radii,
                                int directions) {
  check_coeffs(m0);
  if (radii.size() < 2) throw InvalidInput("exponent fit needs at least two radii");
  if (directions < 1) throw InvalidInput("exponent fit needs directions >= 1");
  const std::size_t n = m0.size();
  const double base = lambda_bar(m0);

  // Unit max-norm directions; for n = 2 they walk the boundary of the square.
  std::vector<std::vector<double>> dirs;
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int d = 0; d < directions; ++d) {
    std::vector<double> v(n);
    if (n == 2) {
      const double ang = 2.0 * std::numbers::pi * d / directions;
      v = {std::cos(ang), std::sin(ang)};
    } else if (n == 1) {
      v = {d % 2 == 0 ? 1.0 : -1.0};
    } else {
      for (auto& x : v) x = u(rng);
    }
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    for (auto& x : v) x /= mx;
    dirs.push_back(std::move(v));
  }

  ExponentFit fit;
  std::vector<double> lx, ly;
  for (double r : radii) {
    double jump = 0.0;
    for (const auto& d : dirs) {
      std::vector<Complex> m(m0.begin(), m0.end());
      for (std::size_t k = 0; k < n; ++k) m[k] += r * d[k];
      jump = std::max(jump, std::abs(lambda_bar(m) - base));
    }
    fit.radii.push_back(r);
    fit.jumps.push_back(jump);
    if (jump > 0.0 && r > 0.0) {
      lx.push_back(std::log(r));
      ly.push_back(std::log(jump));
    }
  }
  if (lx.size() < 2) throw InvalidInput("exponent fit saw fewer than two nonzero jumps");
  const double k = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  fit.exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return fit;
}

void integrate(const IVP& ivp, const std::function<void(double, std::span<const Complex>)>& sink) {
  check_coeffs(ivp.m);
  const std::size_t n = ivp.m.size();
  if (ivp.n.size() != n) throw InvalidInput("initial data must have n entries");
  for (const auto& w : ivp.n) {
    if (!is_finite(w)) throw InvalidInput("non-finite initial value");
  }
  if (!(ivp.h > 0.0) || !(ivp.xi_max > 0.0) || !std::isfinite(ivp.xi_max)) {
    throw InvalidInput("IVP needs h > 0 and xi_max > 0");
  }
  if (ivp.h > ivp.xi_max) throw InvalidInput("IVP step exceeds xi_max");
  const double rho = spectral_radius(ivp.m);
  if (ivp.h * rho > kStepGuard) throw StepTooLarge(ivp.h, rho);

  const auto steps = static_cast<long>(std::ceil(ivp.xi_max / ivp.h - 1e-9));
  const double h = ivp.xi_max / static_cast<double>(steps);

  auto rhs = [&](const std::vector<Complex>& y, std::vector<Complex>& dy) {
    for (std::size_t i = 0; i + 1 < n; ++i) dy[i] = y[i + 1];
    Complex top = 0.0;
    for (std::size_t k = 0; k < n; ++k) top += ivp.m[k] * y[k];
    dy[n - 1] = top;
  };

  std::vector<Complex> y = ivp.n;
  std::vector<Complex> k1(n), k2(n), k3(n), k4(n), tmp(n);
  sink(0.0, y);
  for (long s = 1; s <= steps; ++s) {
    rhs(y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    sink(static_cast<double>(s) * h, y);
  }
}

IvpSolution solve_ivp(const IVP& ivp) {
  IvpSolution sol;
  integrate(ivp, [&](double xi, std::span<const Complex> y) {
    sol.xi.push_back(xi);
    sol.states.emplace_back(y.begin(), y.end());
  });
  return sol;
}

double bound_ratio(std::span<const Complex> state, double xi, double lbar) {
  double top = 0.0;
  for (const auto& w : state) top = std::max(top, std::abs(w));
  const double n = static_cast<double>(state.size());
  return top / ((1.0 + std::pow(xi, n - 1.0)) * std::exp(lbar * xi));
}

BoundReport verify_bound(const DomainBox& box_a, const DomainBox& box_w, const BoundGrid& grid,
                         double xi_max) {
  box_a.validate();
  box_w.validate();
  if (box_a.dim() != box_w.dim()) throw InvalidInput("coefficient and initial-value boxes differ in dimension");
  if (grid.points_a < 1 || grid.points_w < 1 || !(grid.h > 0.0)) throw InvalidInput("bad bound grid");
  if (!(xi_max > 0.0)) throw InvalidInput("xi_max must be positive");

  BoundReport rep;
  rep.grid = grid;
  rep.xi_max = xi_max;
  auto ms = box_a.grid(grid.points_a);
  if (box_a.dim() == 2 && box_a.is_real()) {
    const auto& c0 = box_a.coords[0];
    const auto& c1 = box_a.coords[1];
    auto add = [&](double a0, double a1) {
      if (a0 < c0.re_lo || a0 > c0.re_hi || a1 < c1.re_lo || a1 > c1.re_hi) return;
      ms.push_back({Complex(a0, 0.0), Complex(a1, 0.0)});
      ++rep.double_root_nodes;
    };
    for (double a1 : linspace(c1.re_lo, c1.re_hi, grid.points_a)) add(-a1 * a1 / 4.0, a1);
    for (double a0 : linspace(c0.re_lo, c0.re_hi, grid.points_a)) {
      if (a0 > 0.0) continue;
      const double a1 = 2.0 * std::sqrt(-a0);
      add(a0, a1);
      if (a1 != 0.0) add(a0, -a1);
    }
  }
  const auto ns = box_w.grid(grid.points_w);

  std::vector<double> lbars;
  lbars.reserve(ms.size());
  rep.all_hurwitz = box_a.is_real();
  rep.max_lambda_bar = -std::numeric_limits<double>::infinity();
  for (const auto& m : ms) {
    lbars.push_back(lambda_bar(m));
    rep.max_lambda_bar = std::max(rep.max_lambda_bar, lbars.back());
    if (rep.all_hurwitz && !hurwitz_stable(m).stable) rep.all_hurwitz = false;
  }
  if (rep.all_hurwitz && rep.max_lambda_bar < 0.0) rep.kappa = -rep.max_lambda_bar;

  double decayed = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms[i];
    const double rho = spectral_radius(m);
    const double h = rho > 0.0 ? std::min(grid.h, 0.999 * kStepGuard / rho) : grid.h;
    for (const auto& n : ns) {
      IVP ivp{m, n, xi_max, std::min(h, xi_max)};
      integrate(ivp, [&](double xi, std::span<const Complex> y) {
        const double ratio = bound_ratio(y, xi, lbars[i]);
        ++rep.samples;
        if (ratio > rep.c_tilde) {
          rep.c_tilde = ratio;
          rep.argmax_m = m;
          rep.argmax_n = n;
          rep.argmax_xi = xi;
        }
        if (rep.kappa) decayed = std::max(decayed, bound_ratio(y, xi, -*rep.kappa));
      });
    }
  }
  rep.decayed_bound_holds = rep.kappa.has_value() && decayed <= rep.c_tilde * (1.0 + 1e-12);
  return rep;
}

std::vector<std::pair<double, double>> ratio_surface(std::span<const Complex> m,
                                                     std::span<const Complex> n, double xi_max,
                                                     double h) {
  const double lbar = lambda_bar(m);
  std::vector<std::pair<double, double>> out;
  integrate(IVP{{m.begin(), m.end()}, {n.begin(), n.end()}, xi_max, h},
            [&](double xi, std::span<const Complex> y) { out.emplace_back(xi, bound_ratio(y, xi, lbar)); });
  return out;
}

std::vector<RasterCell> hurwitz_raster(const DomainBox& box, int grid) {
  box.validate();
  if (box.dim() != 2 || !box.is_real()) throw InvalidInput("Hurwitz raster needs a real 2-D box");
  if (grid < 1) throw InvalidInput("raster grid must be >= 1");
  std::vector<RasterCell> cells;
  for (const auto& m : box.grid(grid)) {
    cells.push_back({m[0].real(), m[1].real(), hurwitz_stable(m).stable});
  }
  return cells;
}

}  // namespace rootlab::stability
