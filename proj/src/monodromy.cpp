#include "rootlab/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rootlab/assignment.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/format.hpp"

namespace rootlab::monodromy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string branch_name(std::size_t k) { return "x" + std::to_string(k + 1); }

std::string interval_label(double lo, double hi) {
  return "[" + pi_label(lo) + "," + pi_label(hi) + "]";
}

// Imaginary defect of the expanded coefficients: 0 when from_roots found the
// values conjugate-closed.
double conjugate_defect(const std::vector<Complex>& values) {
  const MonicPoly p = from_roots(values);
  if (p.field() == FieldTag::Real) return 0.0;
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c.imag()));
  return m;
}

double max_branch_residual(const std::vector<Complex>& values) {
  const MonicPoly p = from_roots(values);
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, residual(p, v));
  return m;
}

struct SeparationScan {
  double min_distance = kInf;
  double t = 0.0;
  std::size_t j = 0;
  std::size_t k = 0;
};

SeparationScan scan_separation(const BranchFamily& f, std::size_t piece, double lo, double hi,
                               int samples) {
  SeparationScan s;
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (samples - 1);
    const auto v = f.piece_values(piece, t);
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        const double d = std::abs(v[a] - v[b]);
        if (d < s.min_distance) s = {d, t, a, b};
      }
    }
  }
  return s;
}

IntervalTable endpoint_table(const BranchFamily& f, std::size_t piece) {
  const auto& p = f.pieces[piece];
  IntervalTable tab{p.lo, p.hi, {}};
  const auto start = f.piece_values(piece, p.lo);
  const auto end = f.piece_values(piece, p.hi);
  for (std::size_t k = 0; k < f.degree; ++k) tab.entries.push_back({branch_name(k), start[k], end[k]});
  return tab;
}

double resolve_eps(double eps_end, double length) { return eps_end > 0.0 ? eps_end : 1e-3 * length; }

void check_samples(int samples) {
  if (samples < 2) throw InvalidInput("certificates need at least two samples");
}

}  // namespace

std::vector<Complex> BranchFamily::piece_values(std::size_t piece, double t) const {
  const auto& p = pieces.at(piece);
  std::vector<Complex> v;
  v.reserve(p.branches.size());
  for (const auto& b : p.branches) v.push_back(b(t));
  return v;
}

std::vector<Complex> BranchFamily::branches_at(double t) const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (t >= pieces[i].lo && t <= pieces[i].hi) return piece_values(i, t);
  }
  throw InvalidInput("t outside the family's domain");
}

MonicPoly BranchFamily::poly_at(double t) const { return from_roots(branches_at(t)); }

CoefficientPath BranchFamily::derived_path() const {
  BranchFamily self = *this;
  return CoefficientPath::closed_form(name, degree, alpha(), beta(), field,
                                      [self](double t) { return self.poly_at(t).coeffs(); });
}

bool LoopPermutation::is_identity() const {
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    if (permutation[k] != k) return false;
  }
  return true;
}

std::string LoopPermutation::notation() const {
  std::string out;
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cyc[i] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

LoopPermutation loop_permutation(const CoefficientPath& loop, const TrackControls& c) {
  LoopPermutation lp;
  lp.closure_defect = coeff_distance(loop.coeffs_at(loop.alpha()), loop.coeffs_at(loop.beta()));
  if (lp.closure_defect > kClosureTolerance) throw NotClosed(lp.closure_defect);

  const RootMultiset base = solve_all(loop.at(loop.alpha()), c.solver);
  if (base.any_clustered() || min_pairwise_distance(base.roots) < base.cluster_radius) {
    throw CollisionOnLoop(loop.alpha());
  }
  TrajectoryBundle b;
  try {
    b = track(loop, c, base.roots);
  } catch (const StepUnderflow& e) {
    throw CollisionOnLoop(e.t());
  }
  lp.base_roots = base.roots;
  lp.permutation = match_roots(b.final(), b.initial());
  for (std::size_t k = 0; k < lp.permutation.size(); ++k) {
    lp.match_error = std::max(lp.match_error, std::abs(b.final()[k] - b.initial()[lp.permutation[k]]));
  }
  // The loop is closed, so the final multiset must coincide with the base one.
  if (lp.match_error > 1e-6 * (1.0 + loop.at(loop.alpha()).coeff_scale())) {
    throw Error("loop endpoint roots do not match the base point roots");
  }
  std::vector<bool> seen(lp.permutation.size(), false);
  for (std::size_t s = 0; s < lp.permutation.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t k = s; !seen[k]; k = lp.permutation[k]) {
      seen[k] = true;
      cyc.push_back(k);
    }
    if (cyc.size() == 1) lp.has_fixed_point = true;
    lp.cycles.push_back(std::move(cyc));
  }
  lp.s_min = b.s_min;
  lp.rho_max = b.rho_max;
  lp.delta_max = b.delta_max;
  return lp;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::Equal: return "==";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "<=") return Relation::LessEqual;
  if (s == ">=") return Relation::GreaterEqual;
  if (s == ">") return Relation::Greater;
  if (s == "==") return Relation::Equal;
  throw InvalidInput("unknown relation '" + s + "'");
}

Check Check::make(std::string name, double margin, Relation rel, double threshold) {
  Check c{std::move(name), margin, threshold, rel, false};
  c.pass = c.evaluate();
  return c;
}

bool Check::evaluate() const {
  if (std::isnan(margin) || std::isnan(threshold)) return false;
  switch (relation) {
    case Relation::LessEqual: return margin <= threshold;
    case Relation::GreaterEqual: return margin >= threshold;
    case Relation::Greater: return margin > threshold;
    case Relation::Equal: return margin == threshold;
  }
  return false;
}

const char* to_string(Verdict v) {
  return v == Verdict::ObstructionCertified ? "ObstructionCertified" : "Inconclusive";
}

Verdict BranchCertificate::verdict_from(const std::vector<Check>& checks) {
  if (checks.empty()) return Verdict::Inconclusive;
  for (const auto& c : checks) {
    if (!c.evaluate()) return Verdict::Inconclusive;
  }
  return Verdict::ObstructionCertified;
}

std::optional<std::string> BranchCertificate::first_failing_check() const {
  for (const auto& c : checks) {
    if (!c.evaluate()) return c.name;
  }
  return std::nullopt;
}

std::vector<std::string> BranchCertificate::chain_names() const {
  std::vector<std::string> names;
  for (const auto& link : chain) names.push_back(link.locked.value_or("none"));
  return names;
}

BranchCertificate branch_elimination_certificate(const BranchFamily& family, int samples,
                                                 double eps_end) {
  check_samples(samples);
  if (family.pieces.size() != 1) {
    throw InvalidInput("branch elimination expects a single-interval family");
  }
  const auto& piece = family.pieces.front();
  const double lo = piece.lo;
  const double hi = piece.hi;
  const double eps = resolve_eps(eps_end, hi - lo);

  BranchCertificate cert;
  cert.family = family.name;

  const auto start = family.piece_values(0, lo);
  const auto end = family.piece_values(0, hi);
  const double period_defect =
      coeff_distance(from_roots(start).coeffs(), from_roots(end).coeffs());
  if (period_defect > kPeriodicityTolerance) throw PeriodicityViolated(period_defect);
  cert.checks.push_back(
      Check::make("coefficient_periodicity", period_defect, Relation::LessEqual, kPeriodicityTolerance));

  const SeparationScan sep = scan_separation(family, 0, lo + eps, hi - eps, samples);
  if (!(sep.min_distance > 0.0)) {
    throw SeparationFailure(sep.t, sep.j + 1, sep.k + 1, sep.min_distance);
  }
  cert.checks.push_back(
      Check::make("pointwise_separation" + interval_label(lo, hi), sep.min_distance, Relation::Greater, 0.0));

  double res = 0.0;
  double conj = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = lo + (hi - lo) * i / (samples - 1);
    const auto v = family.piece_values(0, t);
    res = std::max(res, max_branch_residual(v));
    if (family.field == FieldTag::Real) conj = std::max(conj, conjugate_defect(v));
  }
  cert.checks.push_back(Check::make("branch_residual", res, Relation::LessEqual, kBranchResidual));
  if (family.field == FieldTag::Real) {
    cert.checks.push_back(Check::make("real_coefficients", conj, Relation::LessEqual, kConjugateTolerance));
  }

  ChainLink link;
  link.lo = lo;
  link.hi = hi;
  link.rule = "periodicity";
  for (std::size_t k = 0; k < family.degree; ++k) {
    const double move = std::abs(start[k] - end[k]);
    cert.checks.push_back(
        Check::make("transport_" + branch_name(k), move, Relation::GreaterEqual, kTransportMargin));
    if (move <= kEndpointMatch) link.admissible.push_back(branch_name(k));
  }
  cert.chain.push_back(std::move(link));
  cert.endpoint_tables.push_back(endpoint_table(family, 0));
  cert.verdict = BranchCertificate::verdict_from(cert.checks);
  return cert;
}

BranchCertificate forced_chain_certificate(const BranchFamily& family, int samples,
                                           double eps_end) {
  check_samples(samples);
  BranchCertificate cert;
  cert.family = family.name;
  const std::size_t n = family.degree;

  for (std::size_t i = 1; i < family.pieces.size(); ++i) {
    const double t = family.pieces[i].lo;
    const auto left = family.piece_values(i - 1, family.pieces[i - 1].hi);
    const auto right = family.piece_values(i, t);
    double jump = 0.0;
    for (std::size_t k = 0; k < n; ++k) jump = std::max(jump, std::abs(left[k] - right[k]));
    cert.checks.push_back(
        Check::make("junction_continuity@" + pi_label(t), jump, Relation::LessEqual, kIdentityTolerance));
  }

  double closed_defect = 0.0;
  bool has_closed = false;
  double res = 0.0;
  double conj = 0.0;
  for (std::size_t i = 0; i < family.pieces.size(); ++i) {
    const auto& p = family.pieces[i];
    const double eps = resolve_eps(eps_end, p.hi - p.lo);
    const SeparationScan sep = scan_separation(family, i, p.lo + eps, p.hi - eps, samples);
    cert.checks.push_back(Check::make("pointwise_separation" + interval_label(p.lo, p.hi),
                                      sep.min_distance, Relation::Greater, 0.0));
    for (int s = 0; s < samples; ++s) {
      const double t = p.lo + (p.hi - p.lo) * s / (samples - 1);
      const auto v = family.piece_values(i, t);
      res = std::max(res, max_branch_residual(v));
      if (family.field == FieldTag::Real) conj = std::max(conj, conjugate_defect(v));
      if (family.closed_form) {
        if (auto cf = family.closed_form(t)) {
          has_closed = true;
          closed_defect = std::max(closed_defect, coeff_distance(from_roots(v).coeffs(), *cf));
        }
      }
    }
    cert.endpoint_tables.push_back(endpoint_table(family, i));
  }
  if (has_closed) {
    cert.checks.push_back(
        Check::make("closed_form_coefficients", closed_defect, Relation::LessEqual, kIdentityTolerance));
  }
  cert.checks.push_back(Check::make("branch_residual", res, Relation::LessEqual, kBranchResidual));
  if (family.field == FieldTag::Real) {
    cert.checks.push_back(Check::make("real_coefficients", conj, Relation::LessEqual, kConjugateTolerance));
  }

  // Forced chain. On an interval whose end coefficients agree, a continuous
  // selector takes equal values at both ends, so it can only follow a branch
  // with equal endpoint limits. On any other interval it continues the value
  // inherited from the left.
  std::optional<Complex> carried;
  for (std::size_t i = 0; i < family.pieces.size(); ++i) {
    const auto& p = family.pieces[i];
    const std::string label = interval_label(p.lo, p.hi);
    const auto lo_vals = family.piece_values(i, p.lo);
    const auto hi_vals = family.piece_values(i, p.hi);
    const double period_defect =
        coeff_distance(from_roots(lo_vals).coeffs(), from_roots(hi_vals).coeffs());

    ChainLink link;
    link.lo = p.lo;
    link.hi = p.hi;
    double elimination = kInf;
    std::vector<std::size_t> admissible;
    if (period_defect <= kIdentityTolerance) {
      link.rule = "periodicity";
      cert.checks.push_back(
          Check::make("coeff_period" + label, period_defect, Relation::LessEqual, kIdentityTolerance));
      for (std::size_t k = 0; k < n; ++k) {
        const double d = std::abs(lo_vals[k] - hi_vals[k]);
        if (d <= kEndpointMatch) {
          admissible.push_back(k);
        } else {
          elimination = std::min(elimination, d);
        }
      }
    } else {
      link.rule = "continuation";
      if (carried) {
        for (std::size_t k = 0; k < n; ++k) {
          const double d = std::abs(lo_vals[k] - *carried);
          if (d <= kEndpointMatch) {
            admissible.push_back(k);
          } else {
            elimination = std::min(elimination, d);
          }
        }
      }
    }
    for (auto k : admissible) link.admissible.push_back(branch_name(k));
    cert.checks.push_back(Check::make("chain_unique" + label, static_cast<double>(admissible.size()),
                                      Relation::Equal, 1.0));
    cert.checks.push_back(Check::make("chain_elimination_margin" + label,
                                      admissible.size() == 1 ? elimination : 0.0,
                                      Relation::GreaterEqual, kTransportMargin));
    if (admissible.size() != 1) {
      cert.chain.push_back(std::move(link));
      carried.reset();
      break;
    }
    const std::size_t k = admissible.front();
    link.locked = branch_name(k);
    link.value_lo = lo_vals[k];
    link.value_hi = hi_vals[k];
    if (link.rule == "periodicity" && carried && !cert.contradiction) {
      const double gap = std::abs(*carried - link.value_lo);
      if (gap > kTransportMargin) {
        cert.contradiction = Contradiction{p.lo, *carried, link.value_lo, gap,
                                           format_value(*carried) + " != " + format_value(link.value_lo)};
      }
    }
    carried = link.value_hi;
    cert.chain.push_back(std::move(link));
  }
  cert.checks.push_back(Check::make("contradiction_gap", cert.contradiction ? cert.contradiction->gap : 0.0,
                                    Relation::Greater, kTransportMargin));
  cert.verdict = BranchCertificate::verdict_from(cert.checks);
  return cert;
}

BranchCertificate degree5_certificate(int samples, double eps_end,
                                      std::optional<BranchMutation> mutation) {
  return forced_chain_certificate(quintic_real_family(mutation), samples, eps_end);
}

BranchCertificate certify_deg2c(int samples, double eps_end, const TrackControls& c) {
  BranchCertificate cert = branch_elimination_certificate(quad_complex_family(), samples, eps_end);
  const LoopPermutation lp = loop_permutation(preset_path("quad_complex_loop"), c);
  std::size_t fixed = 0;
  for (const auto& cyc : lp.cycles) fixed += cyc.size() == 1 ? 1 : 0;
  cert.checks.push_back(Check::make("loop_fixed_points", static_cast<double>(fixed), Relation::Equal, 0.0));
  cert.checks.push_back(
      Check::make("loop_closure_defect", lp.closure_defect, Relation::LessEqual, kClosureTolerance));
  cert.checks.push_back(Check::make("loop_min_separation", lp.s_min, Relation::Greater, 0.0));
  cert.checks.push_back(Check::make("loop_tracking_residual", lp.rho_max, Relation::LessEqual, 1e-9));
  cert.loop = lp;
  cert.loop_status = "permutation " + lp.notation();
  cert.verdict = BranchCertificate::verdict_from(cert.checks);
  return cert;
}

BranchCertificate certify_deg4r(int samples, double eps_end, const TrackControls& c) {
  BranchCertificate cert = branch_elimination_certificate(quartic_real_family(), samples, eps_end);
  try {
    const LoopPermutation lp = loop_permutation(preset_path("quartic_real_loop"), c);
    cert.loop = lp;
    cert.loop_status = "permutation " + lp.notation();
  } catch (const CollisionOnLoop& e) {
    cert.loop_status = std::string("CollisionOnLoop at t = ") + pi_label(e.t());
  }
  return cert;
}

}  // namespace rootlab::monodromy
