#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>
#include <unistd.h>

#include "rootlab/errors.hpp"

namespace rootlab::cli {

namespace {

void write(const Json& j, int indent, int depth, std::string& s) {
  const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent >= 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent >= 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        s += "{}";
        return;
      }
      s += "{";
      s += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          s += ",";
          s += nl;
        }
        first = false;
        s += pad;
        s += Json(it.key()).dump();
        s += indent >= 0 ? ": " : ":";
        write(it.value(), indent, depth + 1, s);
      }
      s += nl;
      s += close;
      s += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        s += "[]";
        return;
      }
      // Short numeric arrays stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json& e) {
                          return e.is_number() || e.is_null();
                        });
      s += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) s += flat ? ", " : ",";
        first = false;
        if (!flat) {
          s += nl;
          s += pad;
        }
        write(e, indent, depth + 1, s);
      }
      if (!flat) {
        s += nl;
        s += close;
      }
      s += "]";
      return;
    }
    case Json::value_t::number_float:
      s += format_double(j.get<double>());
      return;
    default:
      s += j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const Json& j, int indent) {
  std::string s;
  write(j, indent, 0, s);
  s += "\n";
  return s;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json complex_pair(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json complex_list(const std::vector<Complex>& zs) {
  Json a = Json::array();
  for (const auto& z : zs) a.push_back(complex_pair(z));
  return a;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot open " + tmp.string() + " for writing");
    f << content;
    f.close();
    if (!f) throw InvalidInput("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InvalidInput("cannot move output into place at " + path);
  }
}

}  // namespace rootlab::cli
