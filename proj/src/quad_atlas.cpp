#include "rootlab/quad_atlas.hpp"

#include <algorithm>
#include <cmath>

#include "rootlab/errors.hpp"

namespace rootlab::quad {

namespace {

// S(X, M) of the root formula: -1 inside X, 0 on the parabola, +1 elsewhere.
Complex root_with_sign(int sign, double a0, double a1) {
  const double d = discriminant(a0, a1);
  const double half = -a1 / 2.0;
  if (d > 0.0) return {half + sign * std::sqrt(d) / 2.0, 0.0};
  if (d < 0.0) return {half, sign * std::sqrt(-d) / 2.0};
  return {half, 0.0};
}

bool canonical_member(SelectorId sel, Region r) {
  switch (sel) {
    case SelectorId::EmptySet: return false;
    case SelectorId::FullSet: return true;
    case SelectorId::PlusSet: return r == Region::Plus;
    case SelectorId::MinusSet: return r == Region::Minus;
  }
  return false;
}

int sign_with_dead_zone(double x) {
  if (std::abs(x) < kSigmaDeadZone) return 0;
  return x > 0.0 ? 1 : -1;
}

}  // namespace

const char* to_string(Region r) {
  switch (r) {
    case Region::Plus: return "PlusRegion";
    case Region::Parabola: return "Parabola";
    case Region::Minus: return "MinusRegion";
  }
  return "?";
}

const char* to_string(SelectorId s) {
  switch (s) {
    case SelectorId::EmptySet: return "EmptySet";
    case SelectorId::FullSet: return "FullSet";
    case SelectorId::PlusSet: return "PlusSet";
    case SelectorId::MinusSet: return "MinusSet";
  }
  return "?";
}

const char* to_string(WitnessVerdict v) {
  return v == WitnessVerdict::Discontinuous ? "Discontinuous" : "Inconclusive";
}

SelectorId parse_selector(const std::string& name) {
  if (name == "empty") return SelectorId::EmptySet;
  if (name == "full") return SelectorId::FullSet;
  if (name == "plus") return SelectorId::PlusSet;
  if (name == "minus") return SelectorId::MinusSet;
  throw InvalidInput("unknown selector '" + name + "' (expected empty|full|plus|minus)");
}

SelectorId complement(SelectorId s) {
  switch (s) {
    case SelectorId::EmptySet: return SelectorId::FullSet;
    case SelectorId::FullSet: return SelectorId::EmptySet;
    case SelectorId::PlusSet: return SelectorId::MinusSet;
    case SelectorId::MinusSet: return SelectorId::PlusSet;
  }
  return s;
}

CustomSelector CustomSelector::members(std::vector<Point> points) {
  CustomSelector sel;
  for (const auto& p : points) sel.table.emplace_back(p, true);
  sel.rule = SignRule{-1.0, 0.0, 0.0, true, true};
  return sel;
}

CustomSelector CustomSelector::from_rule(SignRule rule) {
  CustomSelector sel;
  sel.rule = rule;
  return sel;
}

CustomSelector CustomSelector::equivalent_to(SelectorId id) {
  switch (id) {
    case SelectorId::EmptySet: return from_rule({-1.0, 0.0, 0.0, true, true});
    case SelectorId::FullSet: return from_rule({1.0, 0.0, 0.0, true, true});
    case SelectorId::PlusSet: return from_rule({1.0, 0.0, 0.0, true, false});
    case SelectorId::MinusSet: return from_rule({1.0, 0.0, 0.0, false, true});
  }
  return {};
}

bool CustomSelector::contains(Point m) const {
  const Region r = classify(m.a0, m.a1);
  if (r == Region::Parabola) throw InvalidInput("membership queried on the parabola");
  for (const auto& [p, in] : table) {
    if (p == m) return in;
  }
  if (!rule) throw InvalidInput("selector undefined at the queried point");
  const bool applies = r == Region::Plus ? rule->in_plus : rule->in_minus;
  return applies && rule->c0 + rule->c_a0 * m.a0 + rule->c_a1 * m.a1 > 0.0;
}

double discriminant(double a0, double a1) { return a1 * a1 - 4.0 * a0; }

Region classify(double a0, double a1) {
  const double d = discriminant(a0, a1);
  if (d > 0.0) return Region::Plus;
  if (d < 0.0) return Region::Minus;
  return Region::Parabola;
}

Complex xi_root(SelectorId sel, double a0, double a1) {
  if (!std::isfinite(a0) || !std::isfinite(a1)) throw InvalidInput("non-finite coefficient");
  const Region r = classify(a0, a1);
  if (r == Region::Parabola) return root_with_sign(0, a0, a1);
  return root_with_sign(canonical_member(sel, r) ? -1 : 1, a0, a1);
}

Complex custom_root(const CustomSelector& sel, double a0, double a1) {
  if (!std::isfinite(a0) || !std::isfinite(a1)) throw InvalidInput("non-finite coefficient");
  if (classify(a0, a1) == Region::Parabola) return root_with_sign(0, a0, a1);
  return root_with_sign(sel.contains({a0, a1}) ? -1 : 1, a0, a1);
}

ContinuousAtlas enumerate_continuous() {
  return ContinuousAtlas{
      {SelectorId::EmptySet, SelectorId::FullSet, SelectorId::PlusSet, SelectorId::MinusSet},
      {FullRootSet{SelectorId::EmptySet, SelectorId::FullSet},
       FullRootSet{SelectorId::PlusSet, SelectorId::MinusSet}}};
}

WitnessReport discontinuity_witness(const CustomSelector& sel, Point m1, Point m2) {
  const Region r1 = classify(m1.a0, m1.a1);
  const Region r2 = classify(m2.a0, m2.a1);
  if (r1 == Region::Parabola || r1 != r2) {
    throw InvalidInput("witness points must lie in the same open region");
  }
  WitnessReport rep;
  rep.region = r1;
  rep.m1 = m1;
  rep.m2 = m2;
  rep.root1 = custom_root(sel, m1.a0, m1.a1);
  rep.root2 = custom_root(sel, m2.a0, m2.a1);
  auto sigma = [&](Complex root, Point m) {
    const Complex w = 2.0 * root + m.a1;
    return sign_with_dead_zone(r1 == Region::Plus ? w.real() : w.imag());
  };
  rep.sigma1 = sigma(rep.root1, m1);
  rep.sigma2 = sigma(rep.root2, m2);
  if (rep.sigma1 != 0 && rep.sigma1 == -rep.sigma2) {
    rep.verdict = WitnessVerdict::Discontinuous;
  }
  return rep;
}

WitnessReport scan_for_witness(const CustomSelector& sel, std::span<const Point> samples) {
  // First member / non-member seen per region.
  std::optional<Point> in_plus, out_plus, in_minus, out_minus;
  for (const auto& m : samples) {
    const Region r = classify(m.a0, m.a1);
    if (r == Region::Parabola) continue;
    const bool in = sel.contains(m);
    auto& slot = r == Region::Plus ? (in ? in_plus : out_plus) : (in ? in_minus : out_minus);
    if (!slot) slot = m;
    if (in_plus && out_plus) return discontinuity_witness(sel, *in_plus, *out_plus);
    if (in_minus && out_minus) return discontinuity_witness(sel, *in_minus, *out_minus);
  }
  return WitnessReport{};
}

double holder_ratio(SelectorId sel, Point m0, Point m) {
  const double dist = std::hypot(m.a0 - m0.a0, m.a1 - m0.a1);
  if (dist == 0.0) return 0.0;
  const Complex jump = xi_root(sel, m.a0, m.a1) - xi_root(sel, m0.a0, m0.a1);
  return std::abs(jump) / std::sqrt(dist);
}

HolderReport continuity_scan(SelectorId sel, const Box& box, int grid, double max_distance) {
  if (grid < 2) throw InvalidInput("continuity scan grid must be >= 2");
  HolderReport rep;
  rep.exponent = 0.5;
  const double s = 1.0 / std::sqrt(2.0);
  const std::array<Point, 8> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {s, s}, {s, -s}, {-s, s}, {-s, -s}}};
  for (int i = 0; i < grid; ++i) {
    const double y = box.a1_lo + (box.a1_hi - box.a1_lo) * i / (grid - 1);
    const Point m0{y * y / 4.0, y};
    if (m0.a0 < box.a0_lo || m0.a0 > box.a0_hi) continue;
    auto consider = [&](Point m) {
      const double ratio = holder_ratio(sel, m0, m);
      ++rep.samples;
      if (ratio > rep.constant) {
        rep.constant = ratio;
        rep.argmax_x = {m0.a0, m0.a1};
        rep.argmax_y = {m.a0, m.a1};
      }
    };
    for (int j = 1; j <= grid; ++j) {
      const double d = max_distance * j / grid;
      for (const auto& u : dirs) consider({m0.a0 + d * u.a0, m0.a1 + d * u.a1});
      // Approach along the parabola from both sides.
      for (double sgn : {-1.0, 1.0}) {
        const double y1 = y + sgn * d;
        consider({y1 * y1 / 4.0, y1});
      }
    }
  }
  return rep;
}

}  // namespace rootlab::quad
