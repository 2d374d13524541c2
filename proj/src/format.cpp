#include "rootlab/format.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rootlab {

namespace {

std::string plain(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

std::string pi_label(double x) {
  if (std::abs(x) < 1e-12) return "0";
  const double k = std::round(x / std::numbers::pi);
  if (k != 0.0 && std::abs(x - k * std::numbers::pi) <= 1e-9 * std::abs(x)) {
    if (k == 1.0) return "pi";
    if (k == -1.0) return "-pi";
    return plain(k) + "pi";
  }
  return plain(x);
}

std::string format_value(Complex z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) return pi_label(re);
  std::string imag;
  if (im == 1.0) {
    imag = "i";
  } else if (im == -1.0) {
    imag = "-i";
  } else {
    imag = pi_label(im) + "i";
  }
  if (re == 0.0) return imag;
  return pi_label(re) + (im > 0.0 ? "+" : "") + imag;
}

}  // namespace rootlab
