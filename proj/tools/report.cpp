#include "report.hpp"

#include <cmath>
#include <limits>

#include "rootlab/errors.hpp"
#include "rootlab/format.hpp"

namespace rootlab::cli {

namespace {

using monodromy::Check;
using monodromy::Verdict;

std::string interval(double lo, double hi) { return "[" + pi_label(lo) + "," + pi_label(hi) + "]"; }

}  // namespace

Json loop_json(const monodromy::LoopPermutation& lp) {
  Json j;
  j["permutation"] = lp.notation();
  Json mapping = Json::array();
  for (auto k : lp.permutation) mapping.push_back(k + 1);
  j["mapping"] = mapping;
  Json cycles = Json::array();
  for (const auto& c : lp.cycles) {
    Json cyc = Json::array();
    for (auto k : c) cyc.push_back(k + 1);
    cycles.push_back(cyc);
  }
  j["cycles"] = cycles;
  j["identity"] = lp.is_identity();
  j["fixed_point_free"] = !lp.has_fixed_point;
  j["s_min"] = number(lp.s_min);
  j["rho_max"] = number(lp.rho_max);
  j["delta_max"] = number(lp.delta_max);
  j["closure_defect"] = number(lp.closure_defect);
  j["match_error"] = number(lp.match_error);
  j["base_roots"] = complex_list(lp.base_roots);
  return j;
}

Json certificate_json(const monodromy::BranchCertificate& cert) {
  Json j;
  j["family"] = cert.family;
  j["verdict"] = monodromy::to_string(cert.verdict);
  const auto failing = cert.first_failing_check();
  j["failing_check"] = failing ? Json(*failing) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["margin"] = number(c.margin);
    cj["threshold"] = number(c.threshold);
    cj["relation"] = monodromy::to_string(c.relation);
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;

  Json tables = Json::array();
  for (const auto& t : cert.endpoint_tables) {
    Json tj;
    tj["interval"] = interval(t.lo, t.hi);
    tj["lo"] = number(t.lo);
    tj["hi"] = number(t.hi);
    Json entries = Json::array();
    for (const auto& e : t.entries) {
      Json ej;
      ej["branch"] = e.branch;
      ej["start"] = complex_pair(e.start);
      ej["end"] = complex_pair(e.end);
      ej["transition"] = format_value(e.start) + " -> " + format_value(e.end);
      entries.push_back(ej);
    }
    tj["entries"] = entries;
    tables.push_back(tj);
  }
  j["endpoint_tables"] = tables;

  Json chain = Json::array();
  for (const auto& l : cert.chain) {
    Json lj;
    lj["interval"] = interval(l.lo, l.hi);
    lj["rule"] = l.rule;
    lj["admissible"] = l.admissible;
    lj["locked"] = l.locked ? Json(*l.locked) : Json(nullptr);
    lj["value_lo"] = complex_pair(l.value_lo);
    lj["value_hi"] = complex_pair(l.value_hi);
    chain.push_back(lj);
  }
  j["chain"] = chain;
  j["chain_names"] = cert.chain_names();

  if (cert.contradiction) {
    const auto& c = *cert.contradiction;
    Json cj;
    cj["t"] = number(c.t);
    cj["at"] = pi_label(c.t);
    cj["from_left"] = complex_pair(c.from_left);
    cj["from_right"] = complex_pair(c.from_right);
    cj["gap"] = number(c.gap);
    cj["statement"] = c.statement;
    j["contradiction"] = cj;
  } else {
    j["contradiction"] = nullptr;
  }
  j["permutation"] = cert.loop ? Json(cert.loop->notation()) : Json(nullptr);
  j["loop"] = cert.loop ? loop_json(*cert.loop) : Json(nullptr);
  j["loop_status"] = cert.loop_status ? Json(*cert.loop_status) : Json(nullptr);
  return j;
}

RecheckResult recheck_certificate(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("certificate: expected an object");
  if (!doc.contains("checks") || !doc["checks"].is_array()) throw InvalidInput("certificate: field checks missing");
  if (!doc.contains("verdict") || !doc["verdict"].is_string()) throw InvalidInput("certificate: field verdict missing");

  RecheckResult r;
  std::vector<Check> checks;
  for (std::size_t i = 0; i < doc["checks"].size(); ++i) {
    const auto& cj = doc["checks"][i];
    const std::string at = "certificate: checks[" + std::to_string(i) + "]";
    if (!cj.is_object() || !cj.contains("name") || !cj.contains("margin") || !cj.contains("threshold") ||
        !cj.contains("relation") || !cj.contains("pass")) {
      throw InvalidInput(at + " needs name, margin, threshold, relation, pass");
    }
    auto value = [&](const char* key) {
      const auto& v = cj[key];
      if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
      if (!v.is_number()) throw InvalidInput(at + "." + key + ": expected a number");
      return v.get<double>();
    };
    Check c;
    c.name = cj["name"].get<std::string>();
    c.margin = value("margin");
    c.threshold = value("threshold");
    try {
      c.relation = monodromy::parse_relation(cj["relation"].get<std::string>());
    } catch (const Error&) {
      throw InvalidInput(at + ".relation: unknown relation");
    }
    if (!cj["pass"].is_boolean()) throw InvalidInput(at + ".pass: expected a boolean");
    c.pass = c.evaluate();
    if (c.pass != cj["pass"].get<bool>()) r.mismatches.push_back(c.name);
    if (!c.pass && !r.failing_check) r.failing_check = c.name;
    checks.push_back(c);
  }
  r.verdict = monodromy::BranchCertificate::verdict_from(checks);
  const std::string recorded = doc["verdict"].get<std::string>();
  if (recorded != monodromy::to_string(r.verdict)) r.mismatches.push_back("verdict");
  r.consistent = r.mismatches.empty();
  return r;
}

Json bound_json(const stability::BoundReport& rep) {
  Json j;
  j["c_tilde"] = number(rep.c_tilde);
  j["kappa"] = rep.kappa ? number(*rep.kappa) : Json(nullptr);
  j["all_hurwitz"] = rep.all_hurwitz;
  j["decayed_bound_holds"] = rep.decayed_bound_holds;
  j["max_lambda_bar"] = number(rep.max_lambda_bar);
  j["grid"] = Json{{"points_a", rep.grid.points_a}, {"points_w", rep.grid.points_w}, {"h", number(rep.grid.h)}};
  j["xi_max"] = number(rep.xi_max);
  j["samples"] = rep.samples;
  j["double_root_nodes"] = rep.double_root_nodes;
  j["argmax"] = Json{{"m", complex_list(rep.argmax_m)},
                     {"n", complex_list(rep.argmax_n)},
                     {"xi", number(rep.argmax_xi)}};
  return j;
}

Json trajectory_summary_json(const CoefficientPath& path, const TrajectoryBundle& b) {
  Json j;
  j["path"] = path.name();
  j["degree"] = path.degree();
  j["field"] = to_string(path.field());
  j["alpha"] = number(path.alpha());
  j["beta"] = number(path.beta());
  j["steps"] = b.grid.empty() ? 0 : b.grid.size() - 1;
  j["rejected_steps"] = b.rejected_steps;
  j["delta_max"] = number(b.delta_max);
  j["rho_max"] = number(b.rho_max);
  j["s_min"] = number(b.s_min);
  j["factorization_defect"] = number(b.factorization_defect);
  j["initial"] = complex_list(b.initial());
  j["final"] = complex_list(b.final());
  return j;
}

std::string trajectory_csv(const TrajectoryBundle& b) {
  std::string s = "t";
  for (std::size_t k = 1; k <= b.degree(); ++k) {
    s += ",re_" + std::to_string(k) + ",im_" + std::to_string(k);
  }
  s += "\n";
  for (std::size_t j = 0; j < b.grid.size(); ++j) {
    s += format_double(b.grid[j]);
    for (const auto& z : b.roots[j]) {
      s += "," + format_double(z.real()) + "," + format_double(z.imag());
    }
    s += "\n";
  }
  return s;
}

}  // namespace rootlab::cli
