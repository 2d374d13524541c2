#pragma once

#include <string>

#include "rootlab/poly.hpp"

namespace rootlab {

// "0", "pi", "-2pi", ... for multiples of pi (within 1e-9 relative), otherwise
// the shortest round-trip decimal.
std::string pi_label(double x);

// Human-readable complex value: "0", "2i", "-2pi", "0.5+1.25i".
std::string format_value(Complex z);

}  // namespace rootlab
