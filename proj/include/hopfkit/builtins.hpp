#pragma once

#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

/// Compiled-in presentations. Accepted names: H6, J, L, U_n5, heis3, jordan,
/// poly(d) for d >= 1, qplane(q) for rational q != 0.
Presentation builtin(const std::string& name);

/// Names used by the test suites when iterating over every built-in.
std::vector<std::string> builtin_examples();

/// J with Delta(d) reduced to 1(x)d + d(x)1, for negative tests.
Presentation corrupt_drop_dd_correction(const Presentation& j);

}  // namespace hopfkit
