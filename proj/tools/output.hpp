#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rootlab/poly.hpp"

namespace rootlab::cli {

using Json = nlohmann::ordered_json;

// Doubles as %.17g, non-finite values as null, keys in insertion order.
std::string dump(const Json& j, int indent = 2);

// Finite doubles pass through; NaN and infinities become null.
Json number(double x);
Json complex_pair(Complex z);  // [re, im]
Json complex_list(const std::vector<Complex>& zs);

std::string format_double(double x);

// Writes to `path` via a temporary sibling and rename; "-" or empty writes
// to stdout.
void write_output(const std::string& path, const std::string& content, std::ostream& out);

}  // namespace rootlab::cli
