#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rootlab/errors.hpp"
#include "rootlab/format.hpp"
#include "rootlab/monodromy.hpp"

using namespace rootlab;
using namespace rootlab::monodromy;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

const EndpointEntry& entry(const IntervalTable& t, const std::string& branch) {
  for (const auto& e : t.entries) {
    if (e.branch == branch) return e;
  }
  FAIL("missing branch " << branch);
  return t.entries.front();
}

bool all_pass(const BranchCertificate& c) {
  for (const auto& ch : c.checks) {
    if (!ch.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("preset registry") {
  const auto reg = preset_registry();
  CHECK(reg.size() >= 5);
  CHECK(find_preset("quad_complex_loop").degree == 2);
  CHECK(find_preset("constant_loop:5").degree == 5);
  CHECK_THROWS_AS(find_preset("constant_loop:0"), NotFound);
  CHECK_THROWS_AS(find_preset("nope"), NotFound);
  CHECK_THROWS_AS(preset_family("cubic_fold"), NotFound);
  CHECK_THROWS_AS(preset_path("cubic_fold", 2), InvalidInput);
}

TEST_CASE("branch families reproduce their coefficient paths") {
  for (const auto& fam : {quad_complex_family(), quartic_real_family(), quintic_real_family()}) {
    for (double t = fam.alpha(); t <= fam.beta(); t += (fam.beta() - fam.alpha()) / 37.0) {
      const auto p = fam.poly_at(t);
      for (const auto& r : fam.branches_at(t)) CHECK(residual(p, r) <= 1e-12);
      if (fam.closed_form) {
        if (const auto cf = fam.closed_form(t)) CHECK(coeff_distance(*cf, p.coeffs()) <= 1e-9);
      }
    }
  }
}

TEST_CASE("quadratic loop permutation") {
  const auto lp = loop_permutation(preset_path("quad_complex_loop"));
  CHECK(lp.notation() == "(1 2)");
  CHECK_FALSE(lp.has_fixed_point);
  CHECK(lp.closure_defect <= kClosureTolerance);
  CHECK(lp.s_min >= 1.9);
  CHECK(lp.rho_max <= 1e-9);

  const auto twice = loop_permutation(preset_path("quad_complex_loop", 2));
  CHECK(twice.is_identity());
  CHECK(twice.notation() == "()");
}

TEST_CASE("property: constant loops are the identity") {
  for (int n = 1; n <= 8; ++n) {
    const auto lp = loop_permutation(preset_path("constant_loop:" + std::to_string(n)));
    CHECK(lp.is_identity());
    CHECK(lp.delta_max == 0.0);
  }
}

TEST_CASE("loop errors") {
  CHECK_THROWS_AS(loop_permutation(preset_path("quartic_real_loop")), CollisionOnLoop);
  std::vector<PathKnot> open{{0.0, {1.0, 0.0}}, {1.0, {2.0, 0.0}}};
  CHECK_THROWS_AS(loop_permutation(CoefficientPath::sampled(open, FieldTag::Real)), NotClosed);
}

TEST_CASE("relations and checks") {
  for (auto r : {Relation::LessEqual, Relation::GreaterEqual, Relation::Greater, Relation::Equal}) {
    CHECK(parse_relation(to_string(r)) == r);
  }
  CHECK_THROWS_AS(parse_relation("<"), InvalidInput);
  CHECK(Check::make("a", 1.0, Relation::LessEqual, 1.0).pass);
  CHECK_FALSE(Check::make("a", 1.0, Relation::Greater, 1.0).pass);
  CHECK(Check::make("a", 0.0, Relation::Equal, 0.0).pass);
  CHECK_FALSE(Check::make("a", std::nan(""), Relation::LessEqual, 1.0).pass);
  CHECK(BranchCertificate::verdict_from({}) == Verdict::Inconclusive);
}

TEST_CASE("complex quadratic certificate") {
  const auto cert = certify_deg2c(1024);
  CHECK(cert.verdict == Verdict::ObstructionCertified);
  CHECK(all_pass(cert));
  REQUIRE(cert.loop);
  CHECK(cert.loop->notation() == "(1 2)");
  REQUIRE(cert.endpoint_tables.size() == 1);
  const auto& t = cert.endpoint_tables[0];
  // x1 = e^{it/2}: 1 -> -1, x2 = -e^{it/2}: -1 -> 1
  CHECK(std::abs(entry(t, "x1").start - 1.0) <= 1e-9);
  CHECK(std::abs(entry(t, "x1").end + 1.0) <= 1e-9);
  CHECK(std::abs(entry(t, "x2").start + 1.0) <= 1e-9);
  CHECK(std::abs(entry(t, "x2").end - 1.0) <= 1e-9);
}

TEST_CASE("real quartic certificate endpoint table") {
  const auto cert = certify_deg4r(4096);
  CHECK(cert.verdict == Verdict::ObstructionCertified);
  REQUIRE(cert.endpoint_tables.size() == 1);
  const auto& t = cert.endpoint_tables[0];
  const Complex two_i = 2.0 * kI;
  CHECK(std::abs(entry(t, "x1").start) <= 1e-9);
  CHECK(std::abs(entry(t, "x1").end - two_i) <= 1e-9);
  CHECK(std::abs(entry(t, "x2").start - two_i) <= 1e-9);
  CHECK(std::abs(entry(t, "x2").end) <= 1e-9);
  CHECK(std::abs(entry(t, "x3").start) <= 1e-9);
  CHECK(std::abs(entry(t, "x3").end + two_i) <= 1e-9);
  CHECK(std::abs(entry(t, "x4").start + two_i) <= 1e-9);
  CHECK(std::abs(entry(t, "x4").end) <= 1e-9);
  REQUIRE(cert.loop_status);
  CHECK(*cert.loop_status == "CollisionOnLoop at t = 0");
}

TEST_CASE("degree five forced chain") {
  const auto cert = degree5_certificate(2048);
  CHECK(cert.verdict == Verdict::ObstructionCertified);
  CHECK(cert.chain_names() == std::vector<std::string>{"x5", "x5", "x4"});
  REQUIRE(cert.contradiction);
  CHECK(cert.contradiction->gap == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(cert.contradiction->statement == "0 != 2pi");
  CHECK(pi_label(cert.contradiction->t) == "4pi");
}

TEST_CASE("property: every single-branch mutation is caught") {
  for (std::size_t branch = 0; branch < 5; ++branch) {
    for (int piece = -1; piece < 3; ++piece) {
      const auto cert = degree5_certificate(512, 0.0, BranchMutation{branch, piece, {1e-2, 0.0}});
      CHECK_MESSAGE(cert.verdict == Verdict::Inconclusive, "branch " << branch << " piece " << piece);
      CHECK(cert.first_failing_check().has_value());
    }
  }
  CHECK_THROWS_AS(degree5_certificate(64, 0.0, BranchMutation{7, -1, {1e-2, 0.0}}), InvalidInput);
}

TEST_CASE("a fixed branch defeats branch elimination") {
  const auto fam = with_constant_branch(quad_complex_family(), Complex(5.0, 0.0));
  const auto cert = branch_elimination_certificate(fam, 256);
  CHECK(cert.verdict == Verdict::Inconclusive);
  REQUIRE(cert.first_failing_check());
  CHECK(*cert.first_failing_check() == "transport_x3");
}

TEST_CASE("colliding branches raise SeparationFailure") {
  BranchFamily fam;
  fam.name = "touching";
  fam.degree = 2;
  fam.field = FieldTag::Complex;
  fam.pieces = {{0.0, 2.0 * kPi,
                 {[](double) { return Complex(0.0, 0.0); },
                  [](double t) { return Complex(std::max(0.0, std::cos(t)), 0.0); }}}};
  try {
    (void)branch_elimination_certificate(fam, 1024);
    FAIL("expected SeparationFailure");
  } catch (const SeparationFailure& e) {
    CHECK(e.j() == 1);
    CHECK(e.k() == 2);
  }
}

TEST_CASE("coefficient periodicity is required") {
  BranchFamily fam;
  fam.name = "drift";
  fam.degree = 1;
  fam.field = FieldTag::Real;
  fam.pieces = {{0.0, 1.0, {[](double t) { return Complex(t, 0.0); }}}};
  CHECK_THROWS_AS(branch_elimination_certificate(fam, 64), PeriodicityViolated);
}

TEST_CASE("pi labels") {
  CHECK(pi_label(0.0) == "0");
  CHECK(pi_label(kPi) == "pi");
  CHECK(pi_label(-2.0 * kPi) == "-2pi");
  CHECK(pi_label(6.0 * kPi) == "6pi");
  CHECK(pi_label(0.5) == "0.5");
  CHECK(format_value(Complex(0.0, 2.0)) == "2i");
  CHECK(format_value(Complex(0.0, -1.0)) == "-i");
  CHECK(format_value(Complex(-2.0 * kPi, 0.0)) == "-2pi");
  CHECK(format_value(Complex(0.5, 1.25)) == "0.5+1.25i");
}
