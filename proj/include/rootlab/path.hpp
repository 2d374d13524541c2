#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rootlab/poly.hpp"

namespace rootlab {

struct PathKnot {
  double t = 0.0;
  std::vector<Complex> coeffs;
};

// Continuous map t in [alpha, beta] -> coefficient tuple. Either a named
// closed form or a piecewise-linear interpolation of knots.
class CoefficientPath {
 public:
  using CoeffFn = std::function<std::vector<Complex>(double)>;

  static CoefficientPath closed_form(std::string name, std::size_t degree,
                                     double alpha, double beta, FieldTag field,
                                     CoeffFn fn);
  // Knots need strictly increasing t, at least two of them, equal lengths.
  static CoefficientPath sampled(std::vector<PathKnot> knots, FieldTag field);

  std::size_t degree() const noexcept { return degree_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  FieldTag field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }
  bool is_sampled() const noexcept { return !knots_.empty(); }
  const std::vector<PathKnot>& knots() const noexcept { return knots_; }

  std::vector<Complex> coeffs_at(double t) const;
  MonicPoly at(double t) const;

  // Same domain, traversed from beta to alpha: reversed().at(t) ==
  // at(alpha + beta - t).
  CoefficientPath reversed() const;

 private:
  CoefficientPath() = default;

  std::string name_;
  std::size_t degree_ = 0;
  double alpha_ = 0.0;
  double beta_ = 1.0;
  FieldTag field_ = FieldTag::Complex;
  std::vector<PathKnot> knots_;
  std::shared_ptr<const CoeffFn> fn_;
  bool reversed_ = false;
};

}  // namespace rootlab
