#pragma once

#include <doctest.h>

#include <string>
#include <string_view>

#include "hopfkit/builtins.hpp"
#include "hopfkit/pbw.hpp"
#include "hopfkit/text.hpp"

#define CHECK_ERROR_KIND(expr, expected)                       \
  do {                                                         \
    try {                                                      \
      (void)(expr);                                            \
      FAIL_CHECK("no hopfkit::Error from " #expr);             \
    } catch (const hopfkit::Error& hopfkit_error_) {           \
      CHECK_MESSAGE(hopfkit_error_.kind() == (expected), hopfkit_error_.what()); \
    }                                                          \
  } while (false)

namespace testing {

inline hopfkit::PBWElement nf(const hopfkit::Algebra& a, std::string_view expr) {
  return a.normal_form(hopfkit::parse_free_expression(a.presentation(), expr));
}

inline hopfkit::PBWElement pbw(const hopfkit::Algebra& a, std::string_view expr) {
  return hopfkit::parse_pbw_expression(a.presentation(), expr);
}

inline std::string show(const hopfkit::Algebra& a, const hopfkit::PBWElement& x) {
  return hopfkit::render(x, a.alphabet());
}

}  // namespace testing
