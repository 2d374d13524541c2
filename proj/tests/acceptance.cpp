// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/monodromy.hpp"
#include "rootlab/quad_atlas.hpp"
#include "rootlab/stability.hpp"
#include "rootlab/tracker.hpp"

using namespace rootlab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Gate {
 public:
  void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool pass = o.pass && in_time;
    all_ &= pass;
    std::printf("criterion %d [%s]: %s (%s; %.2f s of %.0f s)\n", id, title, pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs, limit_s);
    std::fflush(stdout);
  }
  bool all() const { return all_; }

 private:
  bool all_ = true;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome quadratic_atlas() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const auto atlas = quad::enumerate_continuous();
  double worst_res = 0.0, worst_vieta = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double a0 = u(rng), a1 = u(rng);
    const std::vector<double> coeffs{a0, a1};
    const auto p = MonicPoly::real(coeffs);
    for (auto s : atlas.selectors) worst_res = std::max(worst_res, residual(p, quad::xi_root(s, a0, a1)));
    for (const auto& set : atlas.complete_sets) {
      const Complex r1 = quad::xi_root(set.first, a0, a1);
      const Complex r2 = quad::xi_root(set.second, a0, a1);
      worst_vieta = std::max({worst_vieta, std::abs(r1 + r2 + a1), std::abs(r1 * r2 - a0)});
    }
  }
  return {worst_res <= 1e-9 && worst_vieta <= 1e-9,
          "max residual " + fmt("%.2e", worst_res) + ", max Vieta defect " + fmt("%.2e", worst_vieta)};
}

Outcome exactly_four() {
  std::mt19937_64 rng(2002);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<quad::Point> sample(1000);
  for (auto& m : sample) m = {u(rng), u(rng)};

  auto splits = [&](const quad::CustomSelector& sel) {
    bool seen[2][2] = {{false, false}, {false, false}};
    for (const auto& m : sample) {
      const auto r = quad::classify(m.a0, m.a1);
      if (r == quad::Region::Parabola) continue;
      seen[r == quad::Region::Plus ? 0 : 1][sel.contains(m) ? 1 : 0] = true;
    }
    return (seen[0][0] && seen[0][1]) || (seen[1][0] && seen[1][1]);
  };

  int split_count = 0, discontinuous = 0, attempts = 0;
  while (split_count < 100 && attempts < 10000) {
    ++attempts;
    quad::CustomSelector sel;
    switch (attempts % 3) {
      case 0:  // random half-plane, restricted to a random subset of regions
        sel = quad::CustomSelector::from_rule(
            {10.0 * unit(rng), unit(rng), unit(rng), unit(rng) > -0.5, unit(rng) > -0.5});
        break;
      case 1: {  // a random finite set of sample points
        std::vector<quad::Point> members;
        for (const auto& m : sample) {
          if (unit(rng) > 0.9) members.push_back(m);
        }
        sel = quad::CustomSelector::members(members);
        break;
      }
      default: {  // canonical selector with random exceptions
        const auto base = quad::enumerate_continuous().selectors[static_cast<std::size_t>(attempts) % 4];
        sel = quad::CustomSelector::equivalent_to(base);
        for (int k = 0; k < 3; ++k) {
          const auto& m = sample[static_cast<std::size_t>(rng() % sample.size())];
          if (quad::classify(m.a0, m.a1) != quad::Region::Parabola) sel.table.push_back({m, !sel.contains(m)});
        }
      }
    }
    if (!splits(sel)) continue;
    ++split_count;
    if (quad::scan_for_witness(sel, sample).verdict == quad::WitnessVerdict::Discontinuous) ++discontinuous;
  }
  int canonical_inconclusive = 0;
  for (auto s : quad::enumerate_continuous().selectors) {
    const auto sel = quad::CustomSelector::equivalent_to(s);
    if (quad::scan_for_witness(sel, sample).verdict == quad::WitnessVerdict::Inconclusive) ++canonical_inconclusive;
  }
  return {split_count == 100 && discontinuous == 100 && canonical_inconclusive == 4,
          std::to_string(discontinuous) + "/" + std::to_string(split_count) + " splits Discontinuous, " +
              std::to_string(canonical_inconclusive) + "/4 canonical Inconclusive"};
}

Outcome quadratic_loop() {
  const auto cert = monodromy::certify_deg2c(4096);
  if (!cert.loop) return {false, "no loop record"};
  const auto& lp = *cert.loop;
  const auto twice = monodromy::loop_permutation(monodromy::preset_path("quad_complex_loop", 2));
  const bool ok = cert.verdict == monodromy::Verdict::ObstructionCertified && lp.notation() == "(1 2)" &&
                  !lp.has_fixed_point && lp.closure_defect <= 1e-10 && lp.s_min >= 1.9 && lp.rho_max <= 1e-9 &&
                  twice.is_identity();
  return {ok, "permutation " + lp.notation() + ", closure " + fmt("%.2e", lp.closure_defect) + ", s_min " +
                  fmt("%.6f", lp.s_min) + ", residual " + fmt("%.2e", lp.rho_max) + ", doubled loop " +
                  twice.notation()};
}

Outcome quartic_table() {
  const auto cert = monodromy::certify_deg4r(4096);
  if (cert.endpoint_tables.size() != 1) return {false, "expected one endpoint table"};
  const Complex two_i(0.0, 2.0);
  const std::vector<std::pair<Complex, Complex>> expected{{0.0, two_i}, {two_i, 0.0}, {0.0, -two_i}, {-two_i, 0.0}};
  const auto& t = cert.endpoint_tables[0];
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& e = t.entries.at(k);
    if (e.branch != "x" + std::to_string(k + 1)) return {false, "unexpected branch " + e.branch};
    worst = std::max({worst, std::abs(e.start - expected[k].first), std::abs(e.end - expected[k].second)});
  }
  double separation = 0.0;
  for (const auto& c : cert.checks) {
    if (c.name.rfind("pointwise_separation", 0) == 0) separation = c.margin;
  }
  const bool ok = cert.verdict == monodromy::Verdict::ObstructionCertified && worst <= 1e-9 && separation > 0.0;
  return {ok, "endpoint mismatch " + fmt("%.2e", worst) + ", min separation " + fmt("%.3e", separation) +
                  " over 4096 samples, verdict " + monodromy::to_string(cert.verdict)};
}

std::vector<Complex> quintic_closed_form(double t, double s) {
  const double b0 = 2.0 * (1.0 - std::cos(t));
  const double b1 = -4.0 * std::sin(t);
  const double b2 = 2.0 * (1.0 + std::cos(t));
  return {s * b0, b0 + s * b1, b1 + s * b2, b2, s};
}

Outcome quintic_chain() {
  const auto fam = monodromy::quintic_real_family();
  auto coeffs = [&](double t) { return fam.poly_at(t).coeffs(); };
  const double identity = std::max(coeff_distance(coeffs(0.0), coeffs(2.0 * kPi)),
                                   coeff_distance(coeffs(4.0 * kPi), coeffs(6.0 * kPi)));
  double closed = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t = 2.0 * kPi * i / 2000.0;
    closed = std::max(closed, coeff_distance(coeffs(t), quintic_closed_form(t, 2.0 * kPi)));
    closed = std::max(closed, coeff_distance(coeffs(4.0 * kPi + t), quintic_closed_form(t, -2.0 * kPi)));
  }
  const auto cert = monodromy::degree5_certificate(4096);
  const bool chain_ok = cert.chain_names() == std::vector<std::string>{"x5", "x5", "x4"};
  const double gap = cert.contradiction ? cert.contradiction->gap : 0.0;

  int mutations = 0, caught = 0;
  for (std::size_t branch = 0; branch < 5; ++branch) {
    for (int piece = -1; piece < 3; ++piece) {
      ++mutations;
      const auto m = monodromy::degree5_certificate(1024, 0.0, monodromy::BranchMutation{branch, piece, {1e-2, 0.0}});
      if (m.verdict == monodromy::Verdict::Inconclusive) ++caught;
    }
  }
  const bool ok = identity <= 1e-9 && closed <= 1e-9 && chain_ok && std::abs(gap - 2.0 * kPi) <= 1e-9 &&
                  cert.verdict == monodromy::Verdict::ObstructionCertified && caught == mutations;
  std::string chain;
  for (const auto& n : cert.chain_names()) chain += (chain.empty() ? "" : ",") + n;
  return {ok, "identities " + fmt("%.2e", identity) + ", closed forms " + fmt("%.2e", closed) + ", chain [" + chain +
                  "], gap " + fmt("%.12f", gap) + ", mutations caught " + std::to_string(caught) + "/" +
                  std::to_string(mutations)};
}

Outcome random_tracking() {
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<int> degree(1, 5);
  int accepted = 0, rejected_paths = 0, failures = 0;
  double worst_delta = 0.0, worst_rho = 0.0, worst_end = 0.0;
  bool all_identity = true;
  while (accepted < 50) {
    const auto n = static_cast<std::size_t>(degree(rng));
    std::vector<PathKnot> knots;
    for (int i = 0; i < 4; ++i) {
      const auto roots = oracle::random_roots(rng, n, 2.0, 0.0, true);
      knots.push_back({static_cast<double>(i), from_roots(roots).coeffs()});
    }
    const auto path = CoefficientPath::sampled(knots, FieldTag::Real);

    // Dense independent check of the separation along the path. A real path
    // can only collide at a real double root, and crossing one changes the
    // real-root count, so a count change between samples also disqualifies.
    double s_min = std::numeric_limits<double>::infinity();
    int prev_real = -1;
    for (int j = 0; j <= 3000 && s_min > 1e-2; ++j) {
      const double t = path.alpha() + (path.beta() - path.alpha()) * j / 3000.0;
      const auto roots = solve_all(path.at(t)).roots;
      s_min = std::min(s_min, min_pairwise_distance(roots));
      const int real = oracle::real_root_count(roots);
      if (prev_real >= 0 && real != prev_real) s_min = 0.0;
      prev_real = real;
    }
    if (!(s_min > 1e-2)) {
      ++rejected_paths;
      continue;
    }
    ++accepted;
    try {
      const auto rt = round_trip(path);
      worst_delta = std::max(worst_delta, rt.forward.delta_max);
      worst_rho = std::max({worst_rho, rt.forward.rho_max, rt.backward.rho_max});
      const auto end = solve_all(path.at(path.beta())).roots;
      worst_end = std::max(worst_end, n <= 8 ? oracle::multiset_distance(rt.forward.final(), end) : 0.0);
      all_identity = all_identity && rt.identity();
    } catch (const Error& e) {
      ++failures;
      std::printf("  path %d: %s\n", accepted, e.what());
    }
  }
  const bool ok = failures == 0 && worst_delta <= 0.1 && worst_rho <= 1e-8 && worst_end <= 1e-8 && all_identity;
  return {ok, "50 paths (" + std::to_string(rejected_paths) + " rejected for s_min), failures " +
                  std::to_string(failures) + ", delta_max " + fmt("%.3f", worst_delta) + ", rho_max " +
                  fmt("%.2e", worst_rho) + ", endpoint error " + fmt("%.2e", worst_end) + ", round trips " +
                  (all_identity ? "identity" : "NOT identity")};
}

Outcome local_selection_ladder() {
  std::mt19937_64 rng(7007);
  std::uniform_int_distribution<int> degree(2, 4);
  const std::vector<double> ladder{1e-2, 1e-3, 1e-4};
  bool ok = true;
  double worst_small = 0.0, worst_growth = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(degree(rng));
    std::vector<Complex> roots;
    while (true) {
      roots.clear();
      std::uniform_real_distribution<double> rad(0.0, 1.2), ang(0.0, 2.0 * kPi);
      for (std::size_t k = 0; k < n; ++k) roots.push_back(std::polar(std::sqrt(rad(rng) / 1.2) * 1.2, ang(rng)));
      if (min_pairwise_distance(roots) >= 0.8) break;
    }
    const auto m0 = from_roots(roots);
    TrackControls c;
    c.solver.seed = static_cast<std::uint64_t>(trial);
    const auto rep = local_selection(m0.coeffs(), m0.field(), ladder[0], 200, c, ladder);
    for (std::size_t i = 1; i < rep.deltas.size(); ++i) {
      const double growth = rep.deltas[i] / rep.deltas[i - 1];
      worst_growth = std::max(worst_growth, growth);
      ok = ok && growth <= 1.5;
    }
    worst_small = std::max(worst_small, rep.deltas.back());
    ok = ok && rep.deltas.back() <= 1e-3;
  }
  return {ok, "20 base points, largest step ratio " + fmt("%.3f", worst_growth) + ", max Delta(1e-4) " +
                  fmt("%.2e", worst_small)};
}

Outcome stability_bound() {
  std::mt19937_64 rng(8008);
  std::uniform_real_distribution<double> u(-4.0, 2.0);
  int compared = 0, disagreements = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    std::vector<double> a(n);
    for (auto& x : a) x = u(rng);
    const auto m = stability::to_complex(a);
    const double lb = stability::lambda_bar(m);
    if (std::abs(lb) <= 1e-9) continue;
    ++compared;
    if (stability::hurwitz_stable(m).stable != (lb < 0.0)) ++disagreements;
  }

  const auto box_a = stability::DomainBox::real({{-2.0, -0.5}, {-2.0, -0.5}});
  const auto box_w = stability::DomainBox::real({{-1.0, 1.0}, {-1.0, 1.0}});
  const stability::BoundGrid grid;
  const auto coarse = stability::verify_bound(box_a, box_w, grid, 50.0);
  const auto fine = stability::verify_bound(box_a, box_w, grid.refined(), 50.0);
  const double change = std::abs(fine.c_tilde - coarse.c_tilde) / coarse.c_tilde;

  using stability::IVP;
  auto max_err = [](const IVP& ivp, std::size_t comp, double (*exact)(double)) {
    double worst = 0.0;
    stability::integrate(ivp, [&](double xi, std::span<const Complex> y) {
      worst = std::max(worst, std::abs(y[comp] - exact(xi)));
    });
    return worst;
  };
  const double e_exp = max_err({{-1.0}, {1.0}, 10.0, 1e-3}, 0, [](double x) { return std::exp(-x); });
  const double e_cos = max_err({{-1.0, 0.0}, {1.0, 0.0}, 10.0, 1e-3}, 0, [](double x) { return std::cos(x); });
  const double e_lin = max_err({{0.0, 0.0}, {0.0, 1.0}, 10.0, 1e-3}, 0, [](double x) { return x; });
  const double e_int = std::max({e_exp, e_cos, e_lin});

  const bool ok = disagreements == 0 && coarse.kappa && *coarse.kappa > 0.0 && fine.kappa && change <= 0.05 &&
                  e_int <= 1e-6;
  return {ok, std::to_string(disagreements) + " disagreements in " + std::to_string(compared) + " tuples, kappa " +
                  (coarse.kappa ? fmt("%.4f", *coarse.kappa) : std::string("absent")) + ", C~ " +
                  fmt("%.6f", coarse.c_tilde) + " -> " + fmt("%.6f", fine.c_tilde) + " (" + fmt("%.2e", change) +
                  " relative), integrator error " + fmt("%.2e", e_int)};
}

Outcome lambda_bar_exponent() {
  const std::vector<double> radii{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const std::vector<Complex> m0{0.0, 0.0};
  const auto fit = stability::holder_exponent_fit(m0, radii);
  return {fit.exponent >= 0.4 && fit.exponent <= 0.6, "fitted exponent " + fmt("%.4f", fit.exponent)};
}

}  // namespace

int main() {
  Gate g;
  g.run(1, "quadratic atlas soundness", 5.0, quadratic_atlas);
  g.run(2, "exactly-four classification witness", 5.0, exactly_four);
  g.run(3, "complex quadratic loop certificate", 2.0, quadratic_loop);
  g.run(4, "real quartic endpoint table", 2.0, quartic_table);
  g.run(5, "degree-5 forced chain", 5.0, quintic_chain);
  g.run(6, "random real path tracking", 30.0, random_tracking);
  g.run(7, "local selection ladder", 10.0, local_selection_ladder);
  g.run(8, "stability bound", 60.0, stability_bound);
  g.run(9, "Lbar Hoelder exponent at the double root", 5.0, lambda_bar_exponent);
  std::printf("acceptance: %s\n", g.all() ? "PASS" : "FAIL");
  return g.all() ? 0 : 1;
}
