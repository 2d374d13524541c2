#pragma once

#include <string>

#include "rootlab/path.hpp"

namespace rootlab::cli {

// {"degree": n, "field": "real" | "complex",
//  "samples": [{"t": t, "coeffs": [[re, im], ...]}, ...]}
//
// Throws InvalidInput naming the line and column of a syntax error or the
// offending field of a schema error.
CoefficientPath parse_path_json(const std::string& text);
CoefficientPath load_path_file(const std::string& filename);

}  // namespace rootlab::cli
