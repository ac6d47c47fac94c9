#pragma once

#include <string>
#include <string_view>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

// Expression syntax shared by presentation files and the command line:
//   terms joined by + and -, each an optional coefficient (`3`, `1/3`)
//   followed by generator names with optional `^n` powers, juxtaposed or
//   separated by spaces or `*`; `1` is the unit. Tensor terms join two such
//   monomials with `(x)`.

FreeElement parse_free_expression(const Presentation& p, std::string_view text);
/// As parse_free_expression, but every monomial must already be ordered.
PBWElement parse_pbw_expression(const Presentation& p, std::string_view text);
TensorElement parse_tensor_expression(const Presentation& p, std::string_view text);

/// Presentation file format:
///
///     name: L
///     generators: a:1 b:1 c:2 z:3 w:3
///     rel: b a = a b - c
///     rel: w z = z w - 1/3 c^3
///     coproduct: connected
///     delta: z = 1(x)z + z(x)1 + a(x)c - c(x)a
///
/// Omitted pairs commute, an omitted q is 1, and generators without a delta
/// line are primitive. Any delta line implies `coproduct: connected`.
/// `#` starts a comment. Errors carry the offending line number.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation_file(const std::string& path);

std::string print_presentation(const Presentation& p);

}  // namespace hopfkit
