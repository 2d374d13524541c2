#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "path_file.hpp"
#include "report.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/monodromy.hpp"
#include "rootlab/quad_atlas.hpp"
#include "rootlab/solver.hpp"
#include "rootlab/stability.hpp"
#include "rootlab/tracker.hpp"

namespace rootlab::cli {

namespace {

// JSON config files. Nested objects address subcommands:
//   {"seed": 3, "track": {"eps-cont": 0.05}}
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}\n"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json doc;
    try {
      doc = Json::parse(input);
    } catch (const Json::parse_error& e) {
      throw CLI::ConfigError("config: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw CLI::ConfigError("config: expected a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(doc, {}, items);
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
  }

  static void flatten(const Json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it->is_null()) continue;
      if (it->is_object()) {
        auto p = parents;
        p.push_back(it.key());
        flatten(*it, p, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = it.key();
      if (it->is_array()) {
        for (const auto& e : *it) item.inputs.push_back(scalar(e));
      } else {
        item.inputs.push_back(scalar(*it));
      }
      items.push_back(std::move(item));
    }
  }
};

double parse_double(const std::string& s, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(x)) {
    throw InvalidInput(what + ": cannot parse \"" + s + "\" as a finite number");
  }
  return x;
}

std::vector<double> parse_colon_list(const std::string& s, const std::string& what) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(':', start);
    v.push_back(parse_double(s.substr(start, pos - start), what));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return v;
}

// n coordinates given as lo:hi pairs (real) or re_lo:re_hi:im_lo:im_hi quads.
stability::DomainBox parse_box(const std::string& s, int n, const std::string& what) {
  const auto v = parse_colon_list(s, what);
  const auto dim = static_cast<std::size_t>(n);
  stability::DomainBox box;
  if (v.size() == 2 * dim) {
    for (std::size_t k = 0; k < dim; ++k) box.coords.push_back({v[2 * k], v[2 * k + 1], 0.0, 0.0});
  } else if (v.size() == 4 * dim) {
    for (std::size_t k = 0; k < dim; ++k) {
      box.coords.push_back({v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]});
    }
  } else {
    throw InvalidInput(what + ": expected " + std::to_string(2 * dim) + " (real) or " +
                       std::to_string(4 * dim) + " (complex) colon-separated bounds, got " +
                       std::to_string(v.size()));
  }
  try {
    box.validate();
  } catch (const InvalidInput& e) {
    throw InvalidInput(what + ": " + e.what());
  }
  return box;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n == 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

struct QuadOpts {
  std::string selector = "empty";
  std::string box = "-4:4:-4:4";
  int grid = 100;
  std::string out = "-";
};

struct SourceOpts {
  std::string preset;
  std::string file;
  int turns = 1;
};

struct TrackOpts {
  SourceOpts source;
  std::optional<double> h0;
  std::optional<double> h_min;
  double eps_cont = 0.1;
  double tol = 1e-12;
  int max_iter = 200;
  bool round_trip = false;
  std::string csv;
  std::string out = "-";
};

struct CertifyOpts {
  std::string name;
  int samples = 4096;
  double eps_end = 0.0;
  std::string mutate;
  std::string recheck;
  std::string out = "-";
};

struct StabilityOpts {
  int n = 0;
  std::string box_a;
  std::string box_w;
  int grid_a = 5;
  int grid_w = 3;
  double xi_max = 10.0;
  double h = 1e-2;
  bool refine = false;
  bool raster = false;
  int raster_grid = 21;
  std::string raster_out;
  std::string surface_out;
  int modulus_pairs = 0;
  std::string out = "-";
};

struct SolveOpts {
  std::string coeffs;
  bool complex = false;
  double tol = 1e-12;
  int max_iter = 200;
  std::string out = "-";
};

void add_source(CLI::App* sub, SourceOpts& s) {
  auto* p = sub->add_option("--preset", s.preset, "Built-in path, e.g. quad_complex_loop or constant_loop:3");
  auto* f = sub->add_option("--file", s.file, "Sampled path file (JSON)");
  p->excludes(f);
  sub->add_option("--turns", s.turns, "Repeat a loop preset this many times")->check(CLI::PositiveNumber);
}

CoefficientPath load_source(const SourceOpts& s) {
  if (s.preset.empty() == s.file.empty()) throw InvalidInput("exactly one of --preset or --file is required");
  if (!s.file.empty()) {
    if (s.turns != 1) throw InvalidInput("--turns applies to presets only");
    return load_path_file(s.file);
  }
  return monodromy::preset_path(s.preset, s.turns);
}

int cmd_quad(const QuadOpts& o, std::ostream& out) {
  const auto sel = quad::parse_selector(o.selector);
  const auto b = parse_colon_list(o.box, "--box");
  if (b.size() != 4) throw InvalidInput("--box: expected a0_lo:a0_hi:a1_lo:a1_hi");
  if (b[0] > b[1] || b[2] > b[3]) throw InvalidInput("--box: lo > hi");
  if (o.grid < 1) throw InvalidInput("--grid must be >= 1");
  std::ostringstream csv;
  csv << "a0,a1,region,re,im\n";
  for (double a0 : linspace(b[0], b[1], o.grid)) {
    for (double a1 : linspace(b[2], b[3], o.grid)) {
      const Complex r = quad::xi_root(sel, a0, a1);
      csv << format_double(a0) << ',' << format_double(a1) << ',' << quad::to_string(quad::classify(a0, a1))
          << ',' << format_double(r.real()) << ',' << format_double(r.imag()) << '\n';
    }
  }
  write_output(o.out, csv.str(), out);
  return kOk;
}

TrackControls track_controls(const TrackOpts& o, std::uint64_t seed) {
  TrackControls c;
  c.h0 = o.h0;
  c.h_min = o.h_min;
  c.eps_cont = o.eps_cont;
  c.solver.tol = o.tol;
  c.solver.max_iter = o.max_iter;
  c.solver.seed = seed;
  return c;
}

int cmd_track(const TrackOpts& o, std::uint64_t seed, std::ostream& out) {
  const auto path = load_source(o.source);
  const auto c = track_controls(o, seed);
  Json summary;
  if (o.round_trip) {
    const RoundTrip rt = round_trip(path, c);
    summary = trajectory_summary_json(path, rt.forward);
    Json perm = Json::array();
    for (auto k : rt.permutation) perm.push_back(k + 1);
    summary["round_trip"] = Json{{"identity", rt.identity()},
                                 {"permutation", perm},
                                 {"closure_error", number(rt.closure_error)},
                                 {"backward_delta_max", number(rt.backward.delta_max)},
                                 {"backward_rho_max", number(rt.backward.rho_max)}};
    if (!o.csv.empty()) write_output(o.csv, trajectory_csv(rt.forward), out);
  } else {
    const TrajectoryBundle b = track(path, c);
    summary = trajectory_summary_json(path, b);
    if (!o.csv.empty()) write_output(o.csv, trajectory_csv(b), out);
  }
  summary["seed"] = seed;
  write_output(o.out, dump(summary), out);
  return kOk;
}

int cmd_monodromy(const SourceOpts& s, const TrackOpts& o, std::uint64_t seed, std::ostream& out) {
  const auto path = load_source(s);
  const auto lp = monodromy::loop_permutation(path, track_controls(o, seed));
  Json j;
  j["loop"] = path.name();
  j["turns"] = s.turns;
  j["degree"] = path.degree();
  const Json lj = loop_json(lp);
  for (auto it = lj.begin(); it != lj.end(); ++it) j[it.key()] = *it;
  write_output(o.out, dump(j), out);
  return kOk;
}

std::optional<monodromy::BranchMutation> parse_mutation(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // branch:piece:delta, 1-based, piece may be "all"
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(':', start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3) throw InvalidInput("--mutate: expected branch:piece:delta");
  const double branch = parse_double(parts[0], "--mutate branch");
  if (branch < 1 || branch != std::floor(branch)) throw InvalidInput("--mutate: branch is a 1-based index");
  monodromy::BranchMutation m;
  m.branch = static_cast<std::size_t>(branch) - 1;
  if (parts[1] == "all") {
    m.piece = -1;
  } else {
    const double piece = parse_double(parts[1], "--mutate piece");
    if (piece < 1 || piece != std::floor(piece)) throw InvalidInput("--mutate: piece is a 1-based index or all");
    m.piece = static_cast<int>(piece) - 1;
  }
  m.delta = parse_double(parts[2], "--mutate delta");
  return m;
}

int cmd_recheck(const CertifyOpts& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.recheck, std::ios::binary);
  if (!f) throw InvalidInput("cannot read certificate " + o.recheck);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("certificate: " + std::string(e.what()));
  }
  const auto r = recheck_certificate(doc);
  Json j;
  j["file"] = o.recheck;
  j["consistent"] = r.consistent;
  j["verdict"] = monodromy::to_string(r.verdict);
  j["failing_check"] = r.failing_check ? Json(*r.failing_check) : Json(nullptr);
  j["mismatches"] = r.mismatches;
  write_output(o.out, dump(j), out);
  if (!r.consistent) {
    err << "recheck: recorded results disagree with margins:";
    for (const auto& m : r.mismatches) err << ' ' << m;
    err << '\n';
    return kInconclusive;
  }
  return r.verdict == monodromy::Verdict::ObstructionCertified ? kOk : kInconclusive;
}

int cmd_certify(const CertifyOpts& o, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (!o.recheck.empty()) {
    if (!o.name.empty()) throw InvalidInput("--recheck takes no certificate name");
    return cmd_recheck(o, out, err);
  }
  if (o.samples < 2) throw InvalidInput("--samples must be >= 2");
  const auto mutation = parse_mutation(o.mutate);
  if (mutation && o.name != "deg5r") throw InvalidInput("--mutate applies to deg5r only");
  TrackControls c;
  c.solver.seed = seed;

  monodromy::BranchCertificate cert;
  try {
    if (o.name == "deg2c") {
      cert = monodromy::certify_deg2c(o.samples, o.eps_end, c);
    } else if (o.name == "deg4r") {
      cert = monodromy::certify_deg4r(o.samples, o.eps_end, c);
    } else if (o.name == "deg5r") {
      cert = monodromy::degree5_certificate(o.samples, o.eps_end, mutation);
    } else {
      throw InvalidInput("unknown certificate \"" + o.name + "\" (expected deg2c, deg4r or deg5r)");
    }
  } catch (const SeparationFailure& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const PeriodicityViolated& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  }
  write_output(o.out, dump(certificate_json(cert)), out);
  if (cert.verdict == monodromy::Verdict::Inconclusive) {
    const auto failing = cert.first_failing_check();
    err << "inconclusive: failing check " << failing.value_or("<none>") << '\n';
    return kInconclusive;
  }
  return kOk;
}

int cmd_stability(const StabilityOpts& o, std::uint64_t seed, std::ostream& out) {
  if (o.n < 1) throw InvalidInput("--n must be >= 1");
  if (o.box_a.empty() || o.box_w.empty()) throw InvalidInput("--box-a and --box-w are required");
  const auto box_a = parse_box(o.box_a, o.n, "--box-a");
  const auto box_w = parse_box(o.box_w, o.n, "--box-w");
  if (o.grid_a < 1 || o.grid_w < 1) throw InvalidInput("--grid-a and --grid-w must be >= 1");
  if (!(o.xi_max > 0.0) || !(o.h > 0.0)) throw InvalidInput("--xi-max and --h must be positive");

  const stability::BoundGrid grid{o.grid_a, o.grid_w, o.h};
  const auto rep = stability::verify_bound(box_a, box_w, grid, o.xi_max);
  Json j;
  j["n"] = o.n;
  j["bound"] = bound_json(rep);
  if (o.refine) {
    const auto fine = stability::verify_bound(box_a, box_w, grid.refined(), o.xi_max);
    Json r = bound_json(fine);
    r["relative_change"] = number(std::abs(fine.c_tilde - rep.c_tilde) / rep.c_tilde);
    j["refined"] = r;
  }
  if (o.modulus_pairs > 0) {
    const auto h = stability::lambda_bar_modulus_scan(box_a, o.modulus_pairs, seed);
    j["lambda_bar_modulus"] = Json{{"constant", number(h.constant)},
                                   {"exponent", number(h.exponent)},
                                   {"samples", h.samples},
                                   {"doubling_ratio", h.doubling_ratio ? number(*h.doubling_ratio) : Json(nullptr)}};
  }
  if (o.raster) {
    if (o.raster_grid < 1) throw InvalidInput("--raster-grid must be >= 1");
    const auto cells = stability::hurwitz_raster(box_a, o.raster_grid);
    const auto stable = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.stable; });
    j["raster"] = Json{{"grid", o.raster_grid},
                       {"cells", cells.size()},
                       {"stable_cells", stable},
                       {"all_stable", static_cast<std::size_t>(stable) == cells.size()}};
    if (!o.raster_out.empty()) {
      std::string csv = "a0,a1,stable\n";
      for (const auto& c : cells) {
        csv += format_double(c.a0) + "," + format_double(c.a1) + "," + (c.stable ? "1" : "0") + "\n";
      }
      write_output(o.raster_out, csv, out);
    }
  } else if (!o.raster_out.empty()) {
    throw InvalidInput("--raster-out needs --hurwitz-raster");
  }
  if (!o.surface_out.empty()) {
    const double rho = stability::spectral_radius(rep.argmax_m);
    const double h = rho > 0.0 ? std::min(o.h, 0.0999 / rho) : o.h;
    std::string csv = "xi,ratio\n";
    for (const auto& [xi, ratio] : stability::ratio_surface(rep.argmax_m, rep.argmax_n, o.xi_max, std::min(h, o.xi_max))) {
      csv += format_double(xi) + "," + format_double(ratio) + "\n";
    }
    write_output(o.surface_out, csv, out);
  }
  write_output(o.out, dump(j), out);
  return kOk;
}

std::vector<Complex> parse_coeffs(const std::string& s, bool& any_imag) {
  std::vector<Complex> v;
  any_imag = false;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    const std::string item = s.substr(start, pos - start);
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      v.emplace_back(parse_double(item, "--coeffs"), 0.0);
    } else {
      const double im = parse_double(item.substr(colon + 1), "--coeffs");
      any_imag = any_imag || im != 0.0;
      v.emplace_back(parse_double(item.substr(0, colon), "--coeffs"), im);
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return v;
}

int cmd_solve(const SolveOpts& o, std::uint64_t seed, std::ostream& out) {
  if (o.coeffs.empty()) throw InvalidInput("--coeffs is required");
  bool any_imag = false;
  auto coeffs = parse_coeffs(o.coeffs, any_imag);
  const FieldTag field = (o.complex || any_imag) ? FieldTag::Complex : FieldTag::Real;
  const MonicPoly p(std::move(coeffs), field);
  SolveControls c{o.tol, o.max_iter, seed};
  c.validate();
  const auto rs = solve_all(p, c);
  Json j;
  j["degree"] = p.degree();
  j["field"] = to_string(field);
  j["roots"] = complex_list(rs.roots);
  Json res = Json::array();
  Json cl = Json::array();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    res.push_back(number(residual(p, rs.roots[k])));
    cl.push_back(static_cast<bool>(rs.clustered[k]));
  }
  j["residuals"] = res;
  j["clustered"] = cl;
  j["cluster_radius"] = number(rs.cluster_radius);
  j["seed"] = seed;
  write_output(o.out, dump(j), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root selection, tracking and certification for monic polynomial families", "rootlab"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config; values apply where no flag is given");
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Solver seed")->envname("ROOTLAB_SEED");

  QuadOpts quad_o;
  auto* quad_cmd = app.add_subcommand("quad", "Scan a canonical quadratic selector over a box (CSV)");
  quad_cmd->add_option("--selector", quad_o.selector, "empty | full | plus | minus");
  quad_cmd->add_option("--box", quad_o.box, "a0_lo:a0_hi:a1_lo:a1_hi");
  quad_cmd->add_option("--grid", quad_o.grid, "Nodes per axis");
  quad_cmd->add_option("--out", quad_o.out, "Output file, - for stdout");

  TrackOpts track_o;
  auto* track_cmd = app.add_subcommand("track", "Track all roots along a path");
  add_source(track_cmd, track_o.source);
  track_cmd->add_option("--h0", track_o.h0, "Initial step");
  track_cmd->add_option("--h-min", track_o.h_min, "Smallest step before giving up");
  track_cmd->add_option("--eps-cont", track_o.eps_cont, "Largest root displacement per step");
  track_cmd->add_option("--tol", track_o.tol, "Solver residual tolerance");
  track_cmd->add_option("--max-iter", track_o.max_iter, "Solver iteration cap");
  track_cmd->add_flag("--round-trip", track_o.round_trip, "Also track back and report the permutation");
  track_cmd->add_option("--csv", track_o.csv, "Trajectory CSV output");
  track_cmd->add_option("--out", track_o.out, "Summary JSON output, - for stdout");

  SourceOpts mono_src;
  TrackOpts mono_o;
  auto* mono_cmd = app.add_subcommand("monodromy", "Permutation induced by a closed loop");
  add_source(mono_cmd, mono_src);
  mono_cmd->add_option("--eps-cont", mono_o.eps_cont, "Largest root displacement per step");
  mono_cmd->add_option("--tol", mono_o.tol, "Solver residual tolerance");
  mono_cmd->add_option("--out", mono_o.out, "JSON output, - for stdout");

  CertifyOpts cert_o;
  auto* cert_cmd = app.add_subcommand("certify", "Emit a non-existence certificate (deg2c, deg4r, deg5r)");
  cert_cmd->add_option("name", cert_o.name, "deg2c | deg4r | deg5r");
  cert_cmd->add_option("--samples", cert_o.samples, "Interior samples per interval");
  cert_cmd->add_option("--eps-end", cert_o.eps_end, "Endpoint offset (0 = 1e-3 of the interval)");
  cert_cmd->add_option("--mutate", cert_o.mutate, "deg5r only: branch:piece:delta, 1-based, piece may be all");
  cert_cmd->add_option("--recheck", cert_o.recheck, "Re-validate a certificate file from its margins");
  cert_cmd->add_option("--out", cert_o.out, "JSON output, - for stdout");

  StabilityOpts stab_o;
  auto* stab_cmd = app.add_subcommand("stability", "Exponential bound and Hurwitz checks on coefficient boxes");
  stab_cmd->set_help_flag("--help", "Print this help message and exit");  // --h is the step
  stab_cmd->add_option("--n", stab_o.n, "ODE order");
  stab_cmd->add_option("--box-a", stab_o.box_a, "Coefficient box: lo:hi per coordinate (re_lo:re_hi:im_lo:im_hi for complex)");
  stab_cmd->add_option("--box-w", stab_o.box_w, "Initial-value box, same syntax");
  stab_cmd->add_option("--grid-a", stab_o.grid_a, "Nodes per coefficient dimension");
  stab_cmd->add_option("--grid-w", stab_o.grid_w, "Nodes per initial-value dimension");
  stab_cmd->add_option("--xi-max", stab_o.xi_max, "Integration horizon");
  stab_cmd->add_option("--h", stab_o.h, "RK4 step");
  stab_cmd->add_flag("--refine", stab_o.refine, "Repeat on the refined grid and report the change in C~");
  stab_cmd->add_flag("--hurwitz-raster", stab_o.raster, "Hurwitz stability raster of a real 2-D box");
  stab_cmd->add_option("--raster-grid", stab_o.raster_grid, "Raster nodes per axis");
  stab_cmd->add_option("--raster-out", stab_o.raster_out, "Raster CSV output");
  stab_cmd->add_option("--surface-out", stab_o.surface_out, "Ratio CSV along xi at the maximising (M, N)");
  stab_cmd->add_option("--modulus-pairs", stab_o.modulus_pairs, "Random pairs for the Lbar modulus scan");
  stab_cmd->add_option("--out", stab_o.out, "JSON output, - for stdout");

  SolveOpts solve_o;
  auto* solve_cmd = app.add_subcommand("solve", "All roots of one monic polynomial");
  solve_cmd->add_option("--coeffs", solve_o.coeffs, "a0,a1,...,a_{n-1}; complex entries as re:im");
  solve_cmd->add_flag("--complex", solve_o.complex, "Treat the coefficients as complex");
  solve_cmd->add_option("--tol", solve_o.tol, "Residual tolerance");
  solve_cmd->add_option("--max-iter", solve_o.max_iter, "Iteration cap");
  solve_cmd->add_option("--out", solve_o.out, "JSON output, - for stdout");

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (quad_cmd->parsed()) return cmd_quad(quad_o, out);
    if (track_cmd->parsed()) return cmd_track(track_o, seed, out);
    if (mono_cmd->parsed()) return cmd_monodromy(mono_src, mono_o, seed, out);
    if (cert_cmd->parsed()) return cmd_certify(cert_o, seed, out, err);
    if (stab_cmd->parsed()) return cmd_stability(stab_o, seed, out);
    if (solve_cmd->parsed()) return cmd_solve(solve_o, seed, out);
    err << "no subcommand\n";
    return kUsage;
  } catch (const StepUnderflow& e) {
    err << "collision: " << e.what() << '\n';
    return kCollision;
  } catch (const CollisionOnLoop& e) {
    err << "collision: " << e.what() << '\n';
    return kCollision;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotClosed& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StepTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace rootlab::cli
