#pragma once

#include <optional>
#include <vector>

namespace rootlab {

// Outcome of a Hoelder-modulus scan |f(x) - f(y)| <= C |x - y|^exponent.
struct HolderReport {
  double constant = 0.0;  // largest observed ratio
  double exponent = 0.5;
  long samples = 0;
  std::vector<double> argmax_x;
  std::vector<double> argmax_y;
  // constant(2m samples) / constant(m samples) when a doubling run was made.
  std::optional<double> doubling_ratio;
};

}  // namespace rootlab
