#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, double worst_residual);
  int iterations() const noexcept { return iterations_; }
  double worst_residual() const noexcept { return worst_residual_; }

 private:
  int iterations_;
  double worst_residual_;
};

// The tracker could not continue past `t` without the step falling below h_min.
class StepUnderflow : public Error {
 public:
  explicit StepUnderflow(double t);
  double t() const noexcept { return t_; }

 private:
  double t_;
};

class CollisionOnLoop : public Error {
 public:
  explicit CollisionOnLoop(double t);
  double t() const noexcept { return t_; }

 private:
  double t_;
};

class NotClosed : public Error {
 public:
  explicit NotClosed(double defect);
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class PeriodicityViolated : public Error {
 public:
  explicit PeriodicityViolated(double defect);
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

// Branches j and k (1-based) came closer than the separation threshold at t.
class SeparationFailure : public Error {
 public:
  SeparationFailure(double t, std::size_t j, std::size_t k, double distance);
  double t() const noexcept { return t_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }

 private:
  double t_;
  std::size_t j_;
  std::size_t k_;
};

class StepTooLarge : public Error {
 public:
  StepTooLarge(double h, double spectral_radius);
};

}  // namespace rootlab
