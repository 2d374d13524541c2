#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootlab/holder.hpp"
#include "rootlab/poly.hpp"

// Continuous root selectors of the real quadratic family z^2 + a1 z + a0.
namespace rootlab::quad {

struct Point {
  double a0 = 0.0;
  double a1 = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Region { Plus, Parabola, Minus };

// Each canonical selector names the subset X of the off-parabola plane on
// which the root formula takes the minus sign.
enum class SelectorId { EmptySet, FullSet, PlusSet, MinusSet };

const char* to_string(Region r);
const char* to_string(SelectorId s);
SelectorId parse_selector(const std::string& name);  // "empty" | "full" | "plus" | "minus"
SelectorId complement(SelectorId s);

struct FullRootSet {
  SelectorId first;
  SelectorId second;
};

// Membership rule for a non-canonical subset X.
//
// A table entry fixes membership of one exact point. Points not in the table
// fall back to the sign rule when one is present; without a rule such points
// are outside the predicate's domain.
struct SignRule {
  double c0 = 0.0;
  double c_a0 = 0.0;
  double c_a1 = 0.0;
  bool in_plus = true;   // rule applies on the Plus region
  bool in_minus = true;  // rule applies on the Minus region
};

struct CustomSelector {
  std::vector<std::pair<Point, bool>> table;
  std::optional<SignRule> rule;

  static CustomSelector members(std::vector<Point> points);  // X = points
  static CustomSelector from_rule(SignRule rule);
  static CustomSelector equivalent_to(SelectorId id);

  // Membership of M in X. Throws InvalidInput if M is on the parabola or
  // undefined for this predicate.
  bool contains(Point m) const;
};

double discriminant(double a0, double a1);
Region classify(double a0, double a1);

Complex xi_root(SelectorId sel, double a0, double a1);
Complex custom_root(const CustomSelector& sel, double a0, double a1);

struct ContinuousAtlas {
  std::array<SelectorId, 4> selectors;
  std::array<FullRootSet, 2> complete_sets;
};
ContinuousAtlas enumerate_continuous();

enum class WitnessVerdict { Discontinuous, Inconclusive };
const char* to_string(WitnessVerdict v);

// Dead zone for the half-space sign test.
inline constexpr double kSigmaDeadZone = 1e-12;

struct WitnessReport {
  WitnessVerdict verdict = WitnessVerdict::Inconclusive;
  Region region = Region::Plus;
  Point m1;
  Point m2;
  Complex root1;
  Complex root2;
  int sigma1 = 0;
  int sigma2 = 0;
};

// Half-space sign test. Both points must lie in the same open region. On the
// Plus region sigma = sign(2 Re r + a1); on the Minus region sigma =
// sign(Im(2 r + a1)). Opposite nonzero signs certify that the selector cannot
// be continuous on that (connected) region.
WitnessReport discontinuity_witness(const CustomSelector& sel, Point m1, Point m2);

// Searches `samples` for a member/non-member pair inside one region and runs
// the sign test on it. Inconclusive when no region is split.
WitnessReport scan_for_witness(const CustomSelector& sel,
                               std::span<const Point> samples);

struct Box {
  double a0_lo, a0_hi, a1_lo, a1_hi;
};

// Samples `grid` parabola points inside the box and approaches each of them
// along the eight compass directions and both ways along the parabola, at
// `grid` distances up to max_distance. Reports the largest
// |r(M) - r(M0)| / |M - M0|^(1/2).
HolderReport continuity_scan(SelectorId sel, const Box& box, int grid,
                             double max_distance = 0.5);

// |r(M) - r(M0)| / |M - M0|^(1/2) for one approach point.
double holder_ratio(SelectorId sel, Point m0, Point m);

}  // namespace rootlab::quad
