#include "path_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rootlab/errors.hpp"

namespace rootlab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput("path file: field " + field + ": " + what);
}

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

CoefficientPath parse_path_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InvalidInput("path file: syntax error at line " + std::to_string(line) + ", column " +
                       std::to_string(col));
  }
  if (!doc.is_object()) fail("<root>", "expected an object");

  if (!doc.contains("degree")) fail("degree", "missing");
  const auto& deg = doc["degree"];
  if (!deg.is_number_integer() || deg.get<long long>() < 1) fail("degree", "expected an integer >= 1");
  const auto degree = static_cast<std::size_t>(deg.get<long long>());

  if (!doc.contains("field")) fail("field", "missing");
  if (!doc["field"].is_string()) fail("field", "expected \"real\" or \"complex\"");
  const auto field_name = doc["field"].get<std::string>();
  FieldTag field;
  if (field_name == "real") {
    field = FieldTag::Real;
  } else if (field_name == "complex") {
    field = FieldTag::Complex;
  } else {
    fail("field", "expected \"real\" or \"complex\", got \"" + field_name + "\"");
  }

  if (!doc.contains("samples")) fail("samples", "missing");
  const auto& samples = doc["samples"];
  if (!samples.is_array()) fail("samples", "expected an array");
  if (samples.size() < 2) fail("samples", "need at least two samples");

  std::vector<PathKnot> knots;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string at = "samples[" + std::to_string(i) + "]";
    const auto& s = samples[i];
    if (!s.is_object()) fail(at, "expected an object");
    if (!s.contains("t")) fail(at + ".t", "missing");
    PathKnot knot;
    knot.t = finite_number(s["t"], at + ".t");
    if (!knots.empty() && !(knot.t > knots.back().t)) fail(at + ".t", "t must be strictly increasing");
    if (!s.contains("coeffs")) fail(at + ".coeffs", "missing");
    const auto& cs = s["coeffs"];
    if (!cs.is_array()) fail(at + ".coeffs", "expected an array");
    if (cs.size() != degree) {
      fail(at + ".coeffs", "expected " + std::to_string(degree) + " entries, got " + std::to_string(cs.size()));
    }
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string ck = at + ".coeffs[" + std::to_string(k) + "]";
      if (!cs[k].is_array() || cs[k].size() != 2) fail(ck, "expected [re, im]");
      const double re = finite_number(cs[k][0], ck + "[0]");
      const double im = finite_number(cs[k][1], ck + "[1]");
      if (field == FieldTag::Real && im != 0.0) fail(ck + "[1]", "nonzero imaginary part in a real path");
      knot.coeffs.emplace_back(re, im);
    }
    knots.push_back(std::move(knot));
  }
  return CoefficientPath::sampled(std::move(knots), field);
}

CoefficientPath load_path_file(const std::string& filename) {
  std::ifstream f(filename, std::ios::binary);
  if (!f) throw InvalidInput("cannot read path file " + filename);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_path_json(ss.str());
}

}  // namespace rootlab::cli
