#include <doctest.h>

#include <cmath>
#include <random>

#include "rootlab/errors.hpp"
#include "rootlab/quad_atlas.hpp"

using namespace rootlab;
using namespace rootlab::quad;

namespace {

// Both roots from the textbook formula, sorted by (re, im) so that the
// expected value does not reuse the selector logic.
std::pair<Complex, Complex> textbook_roots(double a0, double a1) {
  const double d = a1 * a1 - 4.0 * a0;
  Complex lo, hi;
  if (d >= 0.0) {
    lo = {(-a1 - std::sqrt(d)) / 2.0, 0.0};
    hi = {(-a1 + std::sqrt(d)) / 2.0, 0.0};
  } else {
    lo = {-a1 / 2.0, -std::sqrt(-d) / 2.0};
    hi = {-a1 / 2.0, std::sqrt(-d) / 2.0};
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("regions") {
  CHECK(classify(-1.0, 0.0) == Region::Plus);
  CHECK(classify(1.0, 0.0) == Region::Minus);
  CHECK(classify(1.0, 2.0) == Region::Parabola);
  CHECK(discriminant(1.0, 3.0) == 5.0);
}

TEST_CASE("canonical selector values at the sample rows") {
  CHECK(xi_root(SelectorId::EmptySet, -1.0, 0.0) == Complex(1.0, 0.0));
  CHECK(xi_root(SelectorId::EmptySet, 1.0, 0.0) == Complex(0.0, 1.0));
  CHECK(xi_root(SelectorId::FullSet, -1.0, 0.0) == Complex(-1.0, 0.0));
  CHECK(xi_root(SelectorId::FullSet, 1.0, 0.0) == Complex(0.0, -1.0));
  CHECK(xi_root(SelectorId::PlusSet, -1.0, 0.0) == Complex(-1.0, 0.0));
  CHECK(xi_root(SelectorId::PlusSet, 1.0, 0.0) == Complex(0.0, 1.0));
  CHECK(xi_root(SelectorId::MinusSet, -1.0, 0.0) == Complex(1.0, 0.0));
  CHECK(xi_root(SelectorId::MinusSet, 1.0, 0.0) == Complex(0.0, -1.0));
  for (auto s : enumerate_continuous().selectors) CHECK(xi_root(s, 1.0, 2.0) == Complex(-1.0, 0.0));
}

TEST_CASE("property: canonical selectors pick a root and complements pick the other") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const auto atlas = enumerate_continuous();
  for (int i = 0; i < 5000; ++i) {
    const double a0 = u(rng), a1 = u(rng);
    const auto [lo, hi] = textbook_roots(a0, a1);
    for (auto s : atlas.selectors) {
      const Complex r = xi_root(s, a0, a1);
      const Complex c = xi_root(complement(s), a0, a1);
      const bool is_lo = std::abs(r - lo) <= 1e-12 * (1 + std::abs(lo));
      const bool is_hi = std::abs(r - hi) <= 1e-12 * (1 + std::abs(hi));
      CHECK((is_lo || is_hi));
      CHECK(std::abs((r + c) + a1) <= 1e-9 * (1 + std::abs(a1)));
      CHECK(std::abs(r * c - a0) <= 1e-9 * (1 + std::abs(a0) + a1 * a1));
    }
  }
}

TEST_CASE("selector bookkeeping") {
  CHECK(parse_selector("plus") == SelectorId::PlusSet);
  CHECK_THROWS_AS(parse_selector("half"), InvalidInput);
  for (auto s : enumerate_continuous().selectors) CHECK(complement(complement(s)) == s);
  const auto atlas = enumerate_continuous();
  CHECK(atlas.complete_sets[0].second == complement(atlas.complete_sets[0].first));
  CHECK(atlas.complete_sets[1].second == complement(atlas.complete_sets[1].first));
}

TEST_CASE("custom selector membership") {
  const auto sel = CustomSelector::members({{-1.0, 0.0}, {5.0, 1.0}});
  CHECK(sel.contains({-1.0, 0.0}));
  CHECK_FALSE(sel.contains({-2.0, 0.0}));
  CHECK_THROWS_AS(sel.contains({1.0, 2.0}), InvalidInput);

  CustomSelector bare;
  bare.table.push_back({{-1.0, 0.0}, true});
  CHECK_THROWS_AS(bare.contains({-3.0, 0.0}), InvalidInput);

  for (auto s : enumerate_continuous().selectors) {
    const auto eq = CustomSelector::equivalent_to(s);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
      const double a0 = u(rng), a1 = u(rng);
      CHECK(custom_root(eq, a0, a1) == xi_root(s, a0, a1));
    }
  }
}

TEST_CASE("witness on a split of the plus region") {
  // X = {a1 > 0} inside the plus region only
  const auto sel = CustomSelector::from_rule({0.0, 0.0, 1.0, true, false});
  const auto rep = discontinuity_witness(sel, {-1.0, 1.0}, {-1.0, -1.0});
  CHECK(rep.verdict == WitnessVerdict::Discontinuous);
  CHECK(rep.region == Region::Plus);
  CHECK(rep.sigma1 == -1);
  CHECK(rep.sigma2 == 1);
}

TEST_CASE("witness on a split of the minus region") {
  const auto sel = CustomSelector::from_rule({-2.0, 1.0, 0.0, false, true});  // a0 > 2
  const auto rep = discontinuity_witness(sel, {3.0, 0.0}, {1.5, 0.0});
  CHECK(rep.verdict == WitnessVerdict::Discontinuous);
  CHECK(rep.region == Region::Minus);
}

TEST_CASE("witness preconditions and canonical selectors") {
  const auto full = CustomSelector::equivalent_to(SelectorId::FullSet);
  CHECK_THROWS_AS(discontinuity_witness(full, {-1.0, 0.0}, {1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(discontinuity_witness(full, {1.0, 2.0}, {1.0, 2.0}), InvalidInput);
  CHECK(discontinuity_witness(full, {-1.0, 0.0}, {-2.0, 0.0}).verdict == WitnessVerdict::Inconclusive);

  std::vector<Point> pts;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) pts.push_back({u(rng), u(rng)});
  for (auto s : enumerate_continuous().selectors) {
    CHECK(scan_for_witness(CustomSelector::equivalent_to(s), pts).verdict == WitnessVerdict::Inconclusive);
  }
  CHECK(scan_for_witness(CustomSelector::members({pts[0]}), pts).verdict == WitnessVerdict::Discontinuous);
}

TEST_CASE("canonical selectors are 1/2-Hoelder at the parabola") {
  const Box box{-4.0, 4.0, -4.0, 4.0};
  for (auto s : enumerate_continuous().selectors) {
    const auto rep = continuity_scan(s, box, 20, 0.5);
    CHECK(rep.samples > 0);
    CHECK(rep.constant < 2.0);
    CHECK(rep.exponent == 0.5);
  }
  // From (0,0) to (-d, 0) the jump is sqrt(d).
  CHECK(holder_ratio(SelectorId::EmptySet, {0.0, 0.0}, {-0.01, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(continuity_scan(SelectorId::EmptySet, box, 1), InvalidInput);
}

TEST_CASE("a discontinuous custom selector has an unbounded ratio") {
  const auto sel = CustomSelector::from_rule({0.0, 0.0, 1.0, true, false});
  const double d = 1e-8;
  const Complex left = custom_root(sel, -1.0, d);
  const Complex right = custom_root(sel, -1.0, -d);
  CHECK(std::abs(left - right) / std::sqrt(2 * d) > 1e3);
}
