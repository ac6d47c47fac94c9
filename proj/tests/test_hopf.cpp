#include "support.hpp"

#include "hopfkit/hopf.hpp"

using namespace hopfkit;
using testing::pbw;
using testing::show;

namespace {

std::string tensor_text(const HopfAlgebra& h, const TensorElement& t) { return render(t, h.alphabet()); }

}  // namespace

TEST_CASE("coproducts in L") {
  const HopfAlgebra l(builtin("L"));
  const Algebra& a = l.algebra();
  CHECK(tensor_text(l, l.coproduct(pbw(a, "z"))) == "1 (x) z + a (x) c - c (x) a + z (x) 1");
  CHECK(tensor_text(l, l.coproduct(pbw(a, "c^2"))) == "1 (x) c^2 + 2 c (x) c + c^2 (x) 1");
  CHECK(tensor_text(l, l.coproduct(a.one())) == "1 (x) 1");
  CHECK(tensor_text(l, l.reduced_coproduct(pbw(a, "z"))) == "a (x) c - c (x) a");
  CHECK(l.reduced_coproduct(pbw(a, "b")).is_zero());
  CHECK(l.counit(pbw(a, "ab - c")) == 0);
  CHECK(l.counit(pbw(a, "3 + a")) == 3);
}

TEST_CASE("primitivity in J") {
  const HopfAlgebra j(builtin("J"));
  const Algebra& a = j.algebra();
  CHECK(is_primitive(j, pbw(a, "d - 1/3 c^3")));
  CHECK_FALSE(is_primitive(j, pbw(a, "d")));
  CHECK(tensor_text(j, j.reduced_coproduct(pbw(a, "d"))) == "c (x) c^2 + c^2 (x) c");
  CHECK(is_primitive(HopfAlgebra(builtin("L")), pbw(Algebra(builtin("L")), "a")));
  CHECK_ERROR_KIND(is_primitive(j, pbw(a, "1 + a")), ErrorKind::NonzeroConstantTerm);
}

TEST_CASE("J relation compatibility covers all fifteen pairs") {
  const HopfAlgebra j(builtin("J"));
  const RelationCompatibilityReport r = check_relation_compatibility(j);
  CHECK(r.checks.size() == 15);
  CHECK(r.passed());
  bool saw_zw = false;
  for (const auto& c : r.checks) saw_zw = saw_zw || c.relation == "[z,w]-d";
  CHECK(saw_zw);
}

TEST_CASE("dropping the correction in Delta(d) breaks [z,w]-d only") {
  const HopfAlgebra bad(corrupt_drop_dd_correction(builtin("J")));
  const RelationCompatibilityReport r = check_relation_compatibility(bad);
  std::vector<std::string> failed;
  for (const auto& c : r.checks)
    if (!c.passed) failed.push_back(c.relation);
  REQUIRE(failed == std::vector<std::string>{"[z,w]-d"});
  for (const auto& c : r.checks)
    if (!c.passed) CHECK(render(c.residual, bad.alphabet()) == "c (x) c^2 + c^2 (x) c");
}

TEST_CASE("coassociativity on generators of J") {
  const HopfAlgebra j(builtin("J"));
  const CoassociativityReport r = check_coassociativity(j);
  CHECK(r.passed());
  REQUIRE(r.generators.size() == 6);
  for (const auto& g : r.generators) {
    if (g.generator == "d") CHECK(render(g.left, j.alphabet()) == "2 c (x) c (x) c");
    if (g.generator == "z") CHECK(g.left.is_zero());
    CHECK(g.left == g.right);
  }
}

TEST_CASE("counit axioms") {
  for (const char* name : {"H6", "J", "L", "U_n5", "heis3"}) CHECK_MESSAGE(check_counit(HopfAlgebra(builtin(name))).passed(), name);
}

TEST_CASE("antipodes") {
  const HopfAlgebra l(builtin("L"));
  const AntipodeTable s = solve_antipode(l);
  for (std::size_t g = 0; g < s.images.size(); ++g)
    CHECK(s.images[g] == -l.algebra().generator(static_cast<int>(g)));
  CHECK(check_involutive_antipode(l, s, 6).passed());

  const HopfAlgebra j(builtin("J"));
  const AntipodeTable sj = solve_antipode(j);
  CHECK(show(j.algebra(), sj.images[5]) == "-d");
  CHECK(show(j.algebra(), sj.images[3]) == "-z");
  CHECK(check_involutive_antipode(j, sj, 6).passed());
  CHECK(show(j.algebra(), apply_antipode(j, sj, pbw(j.algebra(), "ab"))) == "ab - c");
}

TEST_CASE("Hopf construction rejects unsuitable data") {
  CHECK_ERROR_KIND(HopfAlgebra(builtin("jordan")), ErrorKind::NoCoproductAttached);

  Presentation q = builtin("qplane(2)");
  q.set_coproduct(CoproductData{{TensorElement(), TensorElement()}});
  CHECK_ERROR_KIND(HopfAlgebra(q), ErrorKind::QSkewRejected);

  Presentation shape = builtin("heis3");
  CoproductData data{{TensorElement(), TensorElement(), TensorElement()}};
  data.delta[2].add_term({Word(), shape.letter(2)}, 1);
  shape.set_coproduct(data);
  CHECK_ERROR_KIND(HopfAlgebra(shape), ErrorKind::BadCoproductShape);

  Presentation heavy = builtin("heis3");
  CoproductData d2{{TensorElement(), TensorElement(), TensorElement()}};
  d2.delta[0].add_term({heavy.letter(1), heavy.letter(1)}, 1);
  heavy.set_coproduct(d2);
  CHECK_ERROR_KIND(HopfAlgebra(heavy), ErrorKind::BadCoproductShape);
}

TEST_CASE("coproduct weight bound holds termwise in L") {
  const HopfAlgebra l(builtin("L"));
  for (const Word& m : enumerate_basis(l.algebra(), 6))
    for (const auto& [key, c] : l.coproduct_monomial(m)) CHECK(key.first.weight() + key.second.weight() == m.weight());
}
