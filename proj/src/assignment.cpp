#include "rootlab/assignment.hpp"

#include <limits>

#include "rootlab/errors.hpp"

namespace rootlab {

std::vector<std::size_t> min_cost_assignment(const CostMatrix& cost) {
  const std::size_t n = cost.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is the virtual source.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col(n);
  for (std::size_t j = 1; j <= n; ++j) col[p[j] - 1] = j - 1;
  return col;
}

double assignment_cost(const CostMatrix& cost, std::span<const std::size_t> col) {
  double total = 0.0;
  for (std::size_t i = 0; i < col.size(); ++i) total += cost(i, col[i]);
  return total;
}

std::vector<std::size_t> match_roots(std::span<const Complex> from,
                                     std::span<const Complex> to) {
  if (from.size() != to.size()) throw InvalidInput("root sets differ in size");
  CostMatrix cost(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) cost(i, j) = std::abs(from[i] - to[j]);
  }
  return min_cost_assignment(cost);
}

}  // namespace rootlab
