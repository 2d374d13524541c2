#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rootlab/poly.hpp"

namespace rootlab {

// Square cost matrix in row-major order.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

// Minimum-cost perfect assignment (Hungarian method with potentials, O(n^3)).
// Returns col with row i assigned to column col[i].
std::vector<std::size_t> min_cost_assignment(const CostMatrix& cost);

double assignment_cost(const CostMatrix& cost, std::span<const std::size_t> col);

// Assigns `to` onto the ordering of `from` by minimal total Euclidean
// distance: result[k] is the index in `to` matched to from[k].
std::vector<std::size_t> match_roots(std::span<const Complex> from,
                                     std::span<const Complex> to);

}  // namespace rootlab
