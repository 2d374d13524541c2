#include "rootlab/errors.hpp"

#include <sstream>

namespace rootlab {

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

NoConvergence::NoConvergence(int iterations, double worst_residual)
    : Error("no convergence after " + std::to_string(iterations) +
            " iterations (worst residual " + fmt_double(worst_residual) + ")"),
      iterations_(iterations),
      worst_residual_(worst_residual) {}

StepUnderflow::StepUnderflow(double t)
    : Error("step underflow at t = " + fmt_double(t)), t_(t) {}

CollisionOnLoop::CollisionOnLoop(double t)
    : Error("root collision on loop near t = " + fmt_double(t)), t_(t) {}

NotClosed::NotClosed(double defect)
    : Error("loop is not closed (defect " + fmt_double(defect) + ")"),
      defect_(defect) {}

PeriodicityViolated::PeriodicityViolated(double defect)
    : Error("coefficient periodicity violated (defect " + fmt_double(defect) +
            ")"),
      defect_(defect) {}

SeparationFailure::SeparationFailure(double t, std::size_t j, std::size_t k,
                                     double distance)
    : Error("branches x" + std::to_string(j) + " and x" + std::to_string(k) +
            " not separated at t = " + fmt_double(t) + " (distance " +
            fmt_double(distance) + ")"),
      t_(t),
      j_(j),
      k_(k) {}

StepTooLarge::StepTooLarge(double h, double spectral_radius)
    : Error("step " + fmt_double(h) + " violates h*|lambda| <= 0.1 (|lambda| = " +
            fmt_double(spectral_radius) + ")") {}

}  // namespace rootlab
