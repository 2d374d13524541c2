#include "rootlab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootlab/errors.hpp"

namespace rootlab {

const char* to_string(FieldTag tag) {
  return tag == FieldTag::Real ? "real" : "complex";
}

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

MonicPoly::MonicPoly(std::vector<Complex> coeffs, FieldTag tag)
    : coeffs_(std::move(coeffs)), field_(tag) {
  if (coeffs_.empty()) throw InvalidInput("monic polynomial needs degree >= 1");
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw InvalidInput("non-finite coefficient");
    if (field_ == FieldTag::Real && c.imag() != 0.0) {
      throw InvalidInput("real polynomial with nonzero imaginary coefficient");
    }
  }
}

MonicPoly MonicPoly::real(std::span<const double> coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  return MonicPoly(std::move(c), FieldTag::Real);
}

MonicPoly MonicPoly::complex(std::vector<Complex> coeffs) {
  return MonicPoly(std::move(coeffs), FieldTag::Complex);
}

double MonicPoly::coeff_scale() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool RootMultiset::any_clustered() const noexcept {
  return std::find(clustered.begin(), clustered.end(), true) != clustered.end();
}

Complex evaluate(const MonicPoly& p, Complex z) {
  if (!is_finite(z)) throw InvalidInput("non-finite evaluation point");
  const auto& a = p.coeffs();
  Complex acc = 1.0;
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * z + a[k];
  return acc;
}

void evaluate_with_derivative(const MonicPoly& p, Complex z, Complex& value,
                              Complex& derivative) {
  if (!is_finite(z)) throw InvalidInput("non-finite evaluation point");
  const auto& a = p.coeffs();
  Complex v = 1.0;
  Complex d = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + a[k];
  }
  value = v;
  derivative = d;
}

bool conjugate_closed(std::span<const Complex> roots, double tol) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (used[k]) continue;
    used[k] = true;
    if (std::abs(roots[k].imag()) <= tol) continue;
    // Pair with the nearest unused conjugate.
    std::size_t best = roots.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(roots[j] - std::conj(roots[k]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == roots.size() || best_d > tol) return false;
    used[best] = true;
  }
  return true;
}

MonicPoly from_roots(std::span<const Complex> roots) {
  if (roots.empty()) throw InvalidInput("from_roots needs at least one root");
  for (const auto& r : roots) {
    if (!is_finite(r)) throw InvalidInput("non-finite root");
  }
  // c holds ascending coefficients of the running product, leading 1 included.
  std::vector<Complex> c{1.0};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  c.pop_back();
  if (conjugate_closed(roots, kRealTolerance)) {
    for (auto& x : c) x = Complex(x.real(), 0.0);
    return MonicPoly(std::move(c), FieldTag::Real);
  }
  return MonicPoly(std::move(c), FieldTag::Complex);
}

double residual(const MonicPoly& p, Complex z) {
  return std::abs(evaluate(p, z)) / (1.0 + p.coeff_scale());
}

double coeff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InvalidInput("coefficient length mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double min_pairwise_distance(std::span<const Complex> roots) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    for (std::size_t k = j + 1; k < roots.size(); ++k) {
      m = std::min(m, std::abs(roots[j] - roots[k]));
    }
  }
  return m;
}

}  // namespace rootlab
