#include <cmath>
#include <numbers>

#include "rootlab/errors.hpp"
#include "rootlab/monodromy.hpp"

namespace rootlab::monodromy {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// e^{i (t/2 - pi/2)}
Complex half_turn(double t) { return std::polar(1.0, t / 2.0 - kPi / 2.0); }

std::vector<Complex> quartic_coeffs(double t) {
  return {2.0 * (1.0 - std::cos(t)), -4.0 * std::sin(t), 2.0 * (1.0 + std::cos(t)), 0.0};
}

// (x^4 + b2 x^2 + b1 x + b0)(x + s)
std::vector<Complex> quintic_coeffs(double t, double s) {
  const double b0 = 2.0 * (1.0 - std::cos(t));
  const double b1 = -4.0 * std::sin(t);
  const double b2 = 2.0 * (1.0 + std::cos(t));
  return {s * b0, b0 + s * b1, b1 + s * b2, b2, s};
}

std::size_t parse_constant_degree(const std::string& name) {
  if (name == "constant_loop") return 2;
  const std::string prefix = "constant_loop:";
  if (name.rfind(prefix, 0) != 0) return 0;
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 2 ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw NotFound("bad constant_loop degree in '" + name + "'");
  }
  const auto n = static_cast<std::size_t>(std::stoul(digits));
  if (n < 1 || n > 16) throw NotFound("constant_loop degree must be in [1, 16]");
  return n;
}

BranchFamily constant_family(std::size_t n) {
  BranchFamily f;
  f.name = "constant_loop:" + std::to_string(n);
  f.degree = n;
  f.field = FieldTag::Real;
  BranchPiece piece{0.0, 2.0 * kPi, {}};
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    // Exact values on the real axis keep the family conjugate-closed.
    Complex root = std::polar(1.0, angle);
    if (2 * k == n) root = -1.0;
    if (k == 0) root = 1.0;
    piece.branches.push_back([root](double) { return root; });
  }
  f.pieces.push_back(std::move(piece));
  f.closed_form = [n](double) -> std::optional<std::vector<Complex>> {
    std::vector<Complex> c(n, 0.0);
    c[0] = -1.0;
    return c;
  };
  return f;
}

}  // namespace

std::vector<PresetInfo> preset_registry() {
  return {
      {"quad_complex_loop", PresetKind::Loop, 2, 0.0, 2.0 * kPi, FieldTag::Complex, true},
      {"quartic_real_loop", PresetKind::Loop, 4, 0.0, 2.0 * kPi, FieldTag::Real, true},
      {"quintic_real_family", PresetKind::Family, 5, 0.0, 6.0 * kPi, FieldTag::Real, true},
      {"constant_loop", PresetKind::Loop, 2, 0.0, 2.0 * kPi, FieldTag::Real, true},
      {"cubic_fold", PresetKind::Path, 3, -1.0, 1.0, FieldTag::Real, false},
  };
}

PresetInfo find_preset(const std::string& name) {
  if (const std::size_t n = parse_constant_degree(name); n > 0) {
    return {"constant_loop:" + std::to_string(n), PresetKind::Loop, n, 0.0, 2.0 * kPi,
            FieldTag::Real, true};
  }
  for (auto& p : preset_registry()) {
    if (p.name == name) return p;
  }
  throw NotFound("unknown preset '" + name + "'");
}

BranchFamily quad_complex_family() {
  BranchFamily f;
  f.name = "quad_complex_loop";
  f.degree = 2;
  f.field = FieldTag::Complex;
  f.pieces.push_back({0.0, 2.0 * kPi,
                      {[](double t) { return std::polar(1.0, t / 2.0); },
                       [](double t) { return -std::polar(1.0, t / 2.0); }}});
  f.closed_form = [](double t) -> std::optional<std::vector<Complex>> {
    return std::vector<Complex>{-std::polar(1.0, t), 0.0};
  };
  return f;
}

BranchFamily quartic_real_family() {
  BranchFamily f;
  f.name = "quartic_real_loop";
  f.degree = 4;
  f.field = FieldTag::Real;
  f.pieces.push_back({0.0, 2.0 * kPi,
                      {[](double t) { return kI + half_turn(t); },
                       [](double t) { return kI - half_turn(t); },
                       [](double t) { return std::conj(kI + half_turn(t)); },
                       [](double t) { return std::conj(kI - half_turn(t)); }}});
  f.closed_form = [](double t) -> std::optional<std::vector<Complex>> {
    return quartic_coeffs(t);
  };
  return f;
}

BranchFamily quintic_real_family(std::optional<BranchMutation> mutation) {
  BranchFamily f;
  f.name = "quintic_real_family";
  f.degree = 5;
  f.field = FieldTag::Real;
  const double two_pi = 2.0 * kPi;
  f.pieces.push_back({0.0, two_pi,
                      {[](double t) { return kI + half_turn(t); },
                       [](double t) { return kI - half_turn(t); },
                       [](double t) { return std::conj(kI + half_turn(t)); },
                       [](double t) { return std::conj(kI - half_turn(t)); },
                       [two_pi](double) { return Complex(-two_pi, 0.0); }}});
  f.pieces.push_back({two_pi, 2.0 * two_pi,
                      {[](double) { return 2.0 * kI; },
                       [](double) { return Complex(0.0, 0.0); },
                       [](double) { return -2.0 * kI; },
                       [two_pi](double t) { return Complex(t - two_pi, 0.0); },
                       [two_pi](double t) { return Complex(t - 2.0 * two_pi, 0.0); }}});
  f.pieces.push_back({2.0 * two_pi, 3.0 * two_pi,
                      {[](double t) { return kI - half_turn(t); },
                       [](double t) { return kI + half_turn(t); },
                       [](double t) { return std::conj(kI - half_turn(t)); },
                       [two_pi](double) { return Complex(two_pi, 0.0); },
                       [](double t) { return std::conj(kI + half_turn(t)); }}});
  if (mutation) {
    if (mutation->branch >= f.degree || mutation->piece >= static_cast<int>(f.pieces.size())) {
      throw InvalidInput("mutation targets a nonexistent branch or piece");
    }
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
      if (mutation->piece >= 0 && static_cast<std::size_t>(mutation->piece) != i) continue;
      auto& fn = f.pieces[i].branches[mutation->branch];
      fn = [orig = fn, delta = mutation->delta](double t) { return orig(t) + delta; };
    }
  }
  f.closed_form = [two_pi](double t) -> std::optional<std::vector<Complex>> {
    std::vector<Complex> c;
    if (t >= 0.0 && t <= two_pi) {
      for (Complex v : quintic_coeffs(t, two_pi)) c.emplace_back(v);
      return c;
    }
    if (t >= 2.0 * two_pi && t <= 3.0 * two_pi) {
      for (Complex v : quintic_coeffs(t, -two_pi)) c.emplace_back(v);
      return c;
    }
    return std::nullopt;
  };
  return f;
}

BranchFamily with_constant_branch(BranchFamily base, Complex value) {
  base.name += "+constant";
  base.degree += 1;
  for (auto& piece : base.pieces) {
    piece.branches.push_back([value](double) { return value; });
  }
  base.closed_form = nullptr;
  if (value.imag() != 0.0) base.field = FieldTag::Complex;
  return base;
}

BranchFamily preset_family(const std::string& name) {
  const PresetInfo info = find_preset(name);
  if (info.name == "quad_complex_loop") return quad_complex_family();
  if (info.name == "quartic_real_loop") return quartic_real_family();
  if (info.name == "quintic_real_family") return quintic_real_family();
  if (info.name.rfind("constant_loop", 0) == 0) return constant_family(info.degree);
  throw NotFound("preset '" + name + "' has no closed-form branches");
}

CoefficientPath preset_path(const std::string& name, int turns) {
  const PresetInfo info = find_preset(name);
  if (turns < 1) throw InvalidInput("turns must be >= 1");
  if (turns > 1 && info.kind != PresetKind::Loop) {
    throw InvalidInput("preset '" + info.name + "' is not a loop");
  }
  const double beta = info.alpha + turns * (info.beta - info.alpha);
  if (info.name == "quad_complex_loop") {
    return CoefficientPath::closed_form(info.name, 2, info.alpha, beta, FieldTag::Complex,
                                        [](double t) {
                                          return std::vector<Complex>{-std::polar(1.0, t), 0.0};
                                        });
  }
  if (info.name == "quartic_real_loop") {
    return CoefficientPath::closed_form(info.name, 4, info.alpha, beta, FieldTag::Real,
                                        quartic_coeffs);
  }
  if (info.name == "cubic_fold") {
    // x^3 - x + t; real roots fold together at |t| = 2 / (3 sqrt 3).
    return CoefficientPath::closed_form(info.name, 3, info.alpha, beta, FieldTag::Real,
                                        [](double t) {
                                          return std::vector<Complex>{t, -1.0, 0.0};
                                        });
  }
  // Families with explicit branches derive their coefficients by expansion.
  BranchFamily fam = preset_family(info.name);
  if (info.kind == PresetKind::Loop) {
    const std::size_t n = fam.degree;
    return CoefficientPath::closed_form(info.name, n, info.alpha, beta, fam.field,
                                        [fam](double t) { return *fam.closed_form(t); });
  }
  return fam.derived_path();
}

}  // namespace rootlab::monodromy
