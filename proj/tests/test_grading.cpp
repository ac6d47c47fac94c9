#include "support.hpp"
#include "oracles.hpp"

#include "hopfkit/grading.hpp"

using namespace hopfkit;

namespace {

std::vector<long> coefficients(const PowerSeries& h) {
  std::vector<long> out;
  for (const auto& c : h.coefficients()) out.push_back(c.get_si());
  return out;
}

ExponentSequence seq(std::vector<long> n) {
  ExponentSequence out;
  for (long v : n) out.n.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("Hilbert series of the built-ins") {
  // 1/((1-t)^2 (1-t^2) (1-t^3)^2) expanded by hand: 1,2,4,8,13,20,31.
  CHECK(coefficients(hilbert_series(Algebra(builtin("L")), 6)) == std::vector<long>{1, 2, 4, 8, 13, 20, 31});
  CHECK(coefficients(hilbert_series(Algebra(builtin("poly(3)")), 5)) == std::vector<long>{1, 3, 6, 10, 15, 21});
  CHECK(coefficients(hilbert_series(Algebra(builtin("J")), 8)) ==
        oracle::series_by_partition({1, 1, 1, 2, 2, 3}, 8));
}

TEST_CASE("series need a confluent presentation") {
  Presentation p("broken", Alphabet{{"x", 1}, {"y", 1}, {"z", 1}});
  auto tail = [&](int g) {
    PBWElement t;
    t.add_term(p.letter(g), 1);
    return t;
  };
  p.set_relation({2, 1, 1, tail(0)});
  p.set_relation({2, 0, 1, tail(0)});
  p.set_relation({1, 0, 1, tail(2)});
  CHECK_ERROR_KIND(hilbert_series(Algebra(p), 4), ErrorKind::NotConfluent);
}

TEST_CASE("factorization into exponents") {
  CHECK(factor_series(hilbert_series(Algebra(builtin("L")), 10)).trimmed() == seq({2, 1, 2}).n);
  CHECK(factor_series(hilbert_series(Algebra(builtin("J")), 10)).trimmed() == seq({3, 2, 1}).n);
  CHECK(factor_series(hilbert_series(Algebra(builtin("poly(4)")), 10)).trimmed() == seq({4}).n);
  CHECK(factor_series(weight_product_series({1, 1, 1}, 6)).trimmed() == seq({3}).n);

  try {
    factor_series(PowerSeries({Integer(1), Integer(1), Integer(0), Integer(0)}));
    FAIL("1 + t factored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHopfAdmissible);
    CHECK(std::string(e.what()).find("index 2") != std::string::npos);
  }
}

TEST_CASE("factor and expand are inverse") {
  const ExponentSequence n = seq({2, 0, 3, 1});
  const PowerSeries h = expand_exponents(n, 9);
  CHECK(factor_series(h).trimmed() == n.n);
}

TEST_CASE("GK dimension and support") {
  CHECK(gk_dimension(seq({2, 1, 2, 0, 0})).value == 5);
  CHECK_FALSE(gk_dimension(seq({2, 1, 2, 0, 0})).infinite);
  CHECK(gk_dimension(seq({3, 2, 1, 0})).value == 6);
  CHECK(gk_dimension(seq({1, 1, 1})).infinite);

  const SupportReport j = support_interval_check(seq({3, 2, 1, 0}));
  CHECK(j.interval);
  CHECK(j.ell == 4);
  CHECK(support_interval_check(seq({2, 1, 2})).interval);
  const SupportReport gap = support_interval_check(seq({1, 0, 1}), true);
  CHECK_FALSE(gap.interval);
  CHECK(gap.contradiction);
  CHECK_FALSE(support_interval_check(seq({1, 0, 1}), false).contradiction);
}

TEST_CASE("obstructions") {
  const ObstructionReport q = hopf_obstruction(Algebra(builtin("qplane(2)")), 6);
  CHECK(q.verdict == ObstructionVerdict::SkewCommutation);
  CHECK(q.theorem == "skew-commutation");
  const ObstructionReport jp = hopf_obstruction(Algebra(builtin("jordan")), 6);
  CHECK(jp.verdict == ObstructionVerdict::PolynomialSeries);
  CHECK(jp.theorem == "polynomial-series");
  CHECK(hopf_obstruction(Algebra(builtin("L")), 10).verdict == ObstructionVerdict::None);
  CHECK(hopf_obstruction(Algebra(builtin("poly(2)")), 6).verdict == ObstructionVerdict::None);
  CHECK(hopf_obstruction(Algebra(builtin("qplane(1)")), 6).verdict == ObstructionVerdict::None);
}

TEST_CASE("associated graded") {
  const Presentation l = builtin("L");
  const Presentation g = associated_graded(l.with_weights({1, 1, 2, 4, 4}));
  const auto rels = g.nontrivial_relations();
  REQUIRE(rels.size() == 1);
  CHECK(relation_name(g, rels[0]) == "[a,b]-c");
  CHECK_FALSE(g.coproduct().has_value());

  CHECK(associated_graded(builtin("J")).nontrivial_relations().empty());

  const Presentation same = associated_graded(l);
  CHECK(same.nontrivial_relations() == l.nontrivial_relations());

  Presentation up("up", Alphabet{{"a", 1}, {"b", 1}, {"z", 3}});
  PBWElement tail;
  tail.add_term(up.letter(2), 1);
  up.set_relation({1, 0, 1, tail});
  CHECK_ERROR_KIND(associated_graded(up), ErrorKind::TailAboveHead);
}

TEST_CASE("series rendering") {
  CHECK(render_series(weight_product_series({1, 1}, 3)) == "1 + 2t + 3t^2 + 4t^3 + ...");
  CHECK(render_product_form(seq({2, 1, 2})) == "1/((1-t)^2 (1-t^2) (1-t^3)^2)");
  CHECK(render_product_form(seq({3})) == "1/(1-t)^3");
  CHECK(render_exponents(seq({3, 2, 1, 0})) == "(3,2,1)");
}
