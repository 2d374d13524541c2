#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootlab/path.hpp"
#include "rootlab/poly.hpp"
#include "rootlab/tracker.hpp"

namespace rootlab::monodromy {

using BranchFn = std::function<Complex(double)>;

// Closed-form branches valid on the closed interval [lo, hi].
struct BranchPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<BranchFn> branches;
};

// n explicit root branches over consecutive pieces. The coefficient path is
// derived through from_roots.
struct BranchFamily {
  std::string name;
  std::size_t degree = 0;
  FieldTag field = FieldTag::Complex;
  std::vector<BranchPiece> pieces;
  // Independent closed form of the coefficients, where one is known.
  std::function<std::optional<std::vector<Complex>>(double)> closed_form;

  double alpha() const { return pieces.front().lo; }
  double beta() const { return pieces.back().hi; }
  // Branch values at t, taken from the first piece whose interval holds t.
  std::vector<Complex> branches_at(double t) const;
  std::vector<Complex> piece_values(std::size_t piece, double t) const;
  MonicPoly poly_at(double t) const;
  CoefficientPath derived_path() const;
};

enum class PresetKind { Loop, Family, Path };

struct PresetInfo {
  std::string name;
  PresetKind kind = PresetKind::Path;
  std::size_t degree = 0;
  double alpha = 0.0;
  double beta = 0.0;
  FieldTag field = FieldTag::Real;
  bool has_branches = false;
};

// Built-in presets; constant_loop is listed with n = 2 and accepts
// "constant_loop:<n>".
std::vector<PresetInfo> preset_registry();
PresetInfo find_preset(const std::string& name);  // throws NotFound

// Coefficient path of a preset. `turns` > 1 repeats a loop preset.
CoefficientPath preset_path(const std::string& name, int turns = 1);
// Throws NotFound for presets without closed-form branches.
BranchFamily preset_family(const std::string& name);

// Adds `delta` to branch `branch` (0-based) on piece `piece` (all pieces when
// piece < 0).
struct BranchMutation {
  std::size_t branch = 0;
  int piece = -1;
  Complex delta{1e-2, 0.0};
};

BranchFamily quad_complex_family();
BranchFamily quartic_real_family();
BranchFamily quintic_real_family(std::optional<BranchMutation> mutation = std::nullopt);
// Appends a constant branch to `base`; such a family has a fixed branch.
BranchFamily with_constant_branch(BranchFamily base, Complex value);

struct LoopPermutation {
  // permutation[k]: index of the base-point root on which trajectory k ends.
  std::vector<std::size_t> permutation;
  std::vector<std::vector<std::size_t>> cycles;
  bool has_fixed_point = false;
  double s_min = 0.0;
  double rho_max = 0.0;
  double delta_max = 0.0;
  double closure_defect = 0.0;
  double match_error = 0.0;
  std::vector<Complex> base_roots;

  bool is_identity() const;
  // 1-based cycle notation without fixed points, "()" for the identity.
  std::string notation() const;
};

inline constexpr double kClosureTolerance = 1e-10;

// Tracks all roots once around a closed loop and reads off the induced
// permutation. Throws NotClosed, or CollisionOnLoop when the base point has a
// multiple root or the tracker underflows.
LoopPermutation loop_permutation(const CoefficientPath& loop, const TrackControls& c = {});

enum class Relation { LessEqual, GreaterEqual, Greater, Equal };
const char* to_string(Relation r);
Relation parse_relation(const std::string& s);

struct Check {
  std::string name;
  double margin = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::LessEqual;
  bool pass = false;

  static Check make(std::string name, double margin, Relation rel, double threshold);
  bool evaluate() const;  // recomputes pass from margin, relation and threshold
};

enum class Verdict { ObstructionCertified, Inconclusive };
const char* to_string(Verdict v);

struct EndpointEntry {
  std::string branch;
  Complex start;
  Complex end;
};

struct IntervalTable {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<EndpointEntry> entries;
};

// One step of the forced chain: which branch a continuous selector must
// follow on an interval, and why.
struct ChainLink {
  double lo = 0.0;
  double hi = 0.0;
  std::string rule;  // "periodicity" or "continuation"
  std::vector<std::string> admissible;
  std::optional<std::string> locked;
  Complex value_lo;
  Complex value_hi;
};

struct Contradiction {
  double t = 0.0;
  Complex from_left;
  Complex from_right;
  double gap = 0.0;
  std::string statement;
};

struct BranchCertificate {
  std::string family;
  std::vector<Check> checks;
  std::vector<IntervalTable> endpoint_tables;
  std::vector<ChainLink> chain;
  std::optional<Contradiction> contradiction;
  std::optional<LoopPermutation> loop;
  std::optional<std::string> loop_status;
  Verdict verdict = Verdict::Inconclusive;

  // Certified iff every check passes.
  static Verdict verdict_from(const std::vector<Check>& checks);
  std::optional<std::string> first_failing_check() const;
  std::vector<std::string> chain_names() const;
};

// Thresholds shared by the certificates.
inline constexpr double kPeriodicityTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-9;   // coefficient identities, junctions
inline constexpr double kEndpointMatch = 1e-9;       // equal endpoint limits
inline constexpr double kTransportMargin = 1e-6;     // a branch "moves" across the period
inline constexpr double kBranchResidual = 1e-10;
inline constexpr double kConjugateTolerance = 1e-12;

// Branch elimination over one coefficient-periodic interval. eps_end <= 0
// selects 1e-3 of the interval length. Throws PeriodicityViolated and
// SeparationFailure; a branch that returns to its start gives Inconclusive.
BranchCertificate branch_elimination_certificate(const BranchFamily& family, int samples,
                                                 double eps_end = 0.0);

// Forced-chain certificate for the degree-5 family on [0, 6 pi]. Failed
// premises give Inconclusive with the failing check recorded.
BranchCertificate degree5_certificate(int samples, double eps_end = 0.0,
                                      std::optional<BranchMutation> mutation = std::nullopt);
BranchCertificate forced_chain_certificate(const BranchFamily& family, int samples,
                                           double eps_end = 0.0);

// Complex quadratic: loop monodromy plus branch elimination.
BranchCertificate certify_deg2c(int samples, double eps_end = 0.0, const TrackControls& c = {});
// Real quartic: branch elimination; the loop at the double-root base point is
// recorded as loop_status.
BranchCertificate certify_deg4r(int samples, double eps_end = 0.0, const TrackControls& c = {});

}  // namespace rootlab::monodromy
