#include "rootlab/path.hpp"

#include <algorithm>
#include <cmath>

#include "rootlab/errors.hpp"

namespace rootlab {

CoefficientPath CoefficientPath::closed_form(std::string name, std::size_t degree,
                                             double alpha, double beta, FieldTag field,
                                             CoeffFn fn) {
  if (degree == 0) throw InvalidInput("path degree must be >= 1");
  if (!(alpha < beta) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidInput("path domain needs alpha < beta");
  }
  CoefficientPath p;
  p.name_ = std::move(name);
  p.degree_ = degree;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.field_ = field;
  p.fn_ = std::make_shared<const CoeffFn>(std::move(fn));
  return p;
}

CoefficientPath CoefficientPath::sampled(std::vector<PathKnot> knots, FieldTag field) {
  if (knots.size() < 2) throw InvalidInput("sampled path needs at least two knots");
  const std::size_t n = knots.front().coeffs.size();
  if (n == 0) throw InvalidInput("path degree must be >= 1");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& k = knots[i];
    if (!std::isfinite(k.t)) throw InvalidInput("non-finite knot time");
    if (i > 0 && !(knots[i - 1].t < k.t)) {
      throw InvalidInput("knot times must be strictly increasing (knot " + std::to_string(i) + ")");
    }
    if (k.coeffs.size() != n) {
      throw InvalidInput("knot " + std::to_string(i) + " has " + std::to_string(k.coeffs.size()) +
                         " coefficients, expected " + std::to_string(n));
    }
    for (const auto& c : k.coeffs) {
      if (!is_finite(c)) throw InvalidInput("non-finite coefficient in knot " + std::to_string(i));
      if (field == FieldTag::Real && c.imag() != 0.0) {
        throw InvalidInput("real path with complex coefficient in knot " + std::to_string(i));
      }
    }
  }
  CoefficientPath p;
  p.name_ = "sampled";
  p.degree_ = n;
  p.alpha_ = knots.front().t;
  p.beta_ = knots.back().t;
  p.field_ = field;
  p.knots_ = std::move(knots);
  return p;
}

std::vector<Complex> CoefficientPath::coeffs_at(double t) const {
  const double slack = 1e-12 * (beta_ - alpha_);
  if (!(t >= alpha_ - slack && t <= beta_ + slack)) {
    throw InvalidInput("path evaluated outside its domain");
  }
  if (reversed_) t = alpha_ + beta_ - t;
  t = std::clamp(t, alpha_, beta_);

  std::vector<Complex> c;
  if (fn_) {
    c = (*fn_)(t);
  } else {
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double x, const PathKnot& k) { return x < k.t; });
    if (hi == knots_.end()) {
      c = knots_.back().coeffs;
    } else {
      auto lo = hi - 1;
      const double w = (t - lo->t) / (hi->t - lo->t);
      c.resize(degree_);
      for (std::size_t k = 0; k < degree_; ++k) {
        c[k] = (1.0 - w) * lo->coeffs[k] + w * hi->coeffs[k];
      }
    }
  }
  if (c.size() != degree_) throw InvalidInput("path produced wrong coefficient count");
  if (field_ == FieldTag::Real) {
    for (auto& x : c) x = Complex(x.real(), 0.0);
  }
  return c;
}

MonicPoly CoefficientPath::at(double t) const { return MonicPoly(coeffs_at(t), field_); }

CoefficientPath CoefficientPath::reversed() const {
  CoefficientPath p = *this;
  p.reversed_ = !reversed_;
  return p;
}

}  // namespace rootlab
