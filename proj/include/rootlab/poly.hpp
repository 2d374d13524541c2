#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rootlab {

using Complex = std::complex<double>;

enum class FieldTag { Real, Complex };

const char* to_string(FieldTag tag);

// Absolute tolerance used by from_roots to recognise real roots and
// conjugate pairs.
inline constexpr double kRealTolerance = 1e-12;

// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0 stored as the ascending
// coefficient tuple (a_0, ..., a_{n-1}). The leading 1 is implicit.
class MonicPoly {
 public:
  // Throws InvalidInput on empty or non-finite coefficients, or when a real
  // tag is paired with a nonzero imaginary part.
  MonicPoly(std::vector<Complex> coeffs, FieldTag tag);

  static MonicPoly real(std::span<const double> coeffs);
  static MonicPoly complex(std::vector<Complex> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size(); }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  FieldTag field() const noexcept { return field_; }

  // max_k |a_k|
  double coeff_scale() const noexcept;

 private:
  std::vector<Complex> coeffs_;
  FieldTag field_;
};

struct RootMultiset {
  std::vector<Complex> roots;
  // clustered[k] is set when roots[k] lies within cluster_radius of another root.
  std::vector<bool> clustered;
  double cluster_radius = 0.0;

  std::size_t size() const noexcept { return roots.size(); }
  bool any_clustered() const noexcept;
};

// Horner evaluation of z^n + a_{n-1} z^{n-1} + ... + a_0.
Complex evaluate(const MonicPoly& p, Complex z);

// p'(z) by the same Horner pass.
void evaluate_with_derivative(const MonicPoly& p, Complex z, Complex& value,
                              Complex& derivative);

// Coefficients of prod_k (z - roots[k]) by incremental convolution. The
// result is tagged real, with imaginary parts forced to 0, when the roots are
// conjugate-closed within kRealTolerance.
MonicPoly from_roots(std::span<const Complex> roots);

// |p(z)| / (1 + max_k |a_k|)
double residual(const MonicPoly& p, Complex z);

bool is_finite(Complex z) noexcept;

// True when `roots` can be split into real values and conjugate pairs, each
// within `tol`.
bool conjugate_closed(std::span<const Complex> roots, double tol);

// max_k |a_k - b_k| over two coefficient tuples of equal length.
double coeff_distance(std::span<const Complex> a, std::span<const Complex> b);

// Smallest |roots[j] - roots[k]| over j != k; +inf for fewer than two roots.
double min_pairwise_distance(std::span<const Complex> roots);

}  // namespace rootlab
