#include "support.hpp"

using namespace hopfkit;

namespace {

Alphabet l_alphabet() { return builtin("L").alphabet(); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK_ERROR_KIND(parse_rational("1/0"), ErrorKind::SyntaxError);
  CHECK_ERROR_KIND(parse_rational("x"), ErrorKind::SyntaxError);
}

TEST_CASE("word weights") {
  const Alphabet j = builtin("J").alphabet();
  CHECK(Word({}, j).weight() == 0);
  CHECK(Word({3, 4, 5}, j).weight() == 7);  // zwd
  CHECK(Word({0, 1, 2}, l_alphabet()).weight() == 4);
  CHECK_ERROR_KIND(word_weight({9}, j), ErrorKind::InvalidGenerator);
}

TEST_CASE("canonical word order is weight, then length, then lex") {
  const Alphabet a = l_alphabet();
  CHECK(Word({2}, a) < Word({0, 1}, a));  // same weight, shorter first
  CHECK(Word({0, 1}, a) < Word({1, 0}, a));
  CHECK(Word({1, 1}, a) < Word({3}, a));
  CHECK(Word({0, 0, 1}, a).is_ordered());
  CHECK_FALSE(Word({1, 0}, a).is_ordered());
}

TEST_CASE("free algebra arithmetic") {
  auto alpha = std::make_shared<const Alphabet>(l_alphabet());
  const FreeElement a = FreeElement::word(alpha, {0});
  const FreeElement b = FreeElement::word(alpha, {1});
  const FreeElement c = FreeElement::word(alpha, {2});
  const FreeElement ab = FreeElement::word(alpha, {0, 1});

  CHECK(free_add(ab, free_scale(ab, Rational(-1))).is_zero());
  CHECK(render(free_add(free_add(ab, c), c)) == "ab + 2 c");
  CHECK(render(free_add(a, b)) == "b + a");
  CHECK(free_mul(a, b) == ab);
  CHECK(render(free_mul(free_add(a, b), c)) == "bc + ac");
  CHECK(free_mul(free_scale(a, Rational(2)), free_scale(b, make_rational(1, 2))) == ab);

  auto other = std::make_shared<const Alphabet>(builtin("H6").alphabet());
  CHECK_ERROR_KIND(free_add(a, FreeElement::word(other, {0})), ErrorKind::AlphabetMismatch);
}

TEST_CASE("rendering") {
  const Alphabet a = l_alphabet();
  CHECK(render_word(Word({0, 0, 1}, a), a) == "a^2b");
  CHECK(render_word(Word({}, a), a).empty());
  PBWElement x;
  x.add_term(Word({0, 0, 1}, a), 1);
  x.add_term(Word({0, 2}, a), -2);
  CHECK(render(x, a) == "a^2b - 2 ac");
  PBWElement y;
  y.add_term(Word({2, 2, 2}, a), make_rational(1, 3));
  CHECK(render(y, a) == "1/3 c^3");
  CHECK(render(PBWElement(), a) == "0");
  CHECK(render(PBWElement::scalar(Rational(-1)), a) == "-1");
}
