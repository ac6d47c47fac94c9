#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "oracles.hpp"

#include <random>

#include "hopfkit/properties.hpp"
#include "hopfkit/subspace.hpp"

using namespace hopfkit;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr std::size_t kCases = 500;

const std::vector<std::string> kHopfBuiltins{"H6", "J", "L", "U_n5", "heis3", "poly(3)"};

void report(const PropertyResult& r) {
  INFO(r.name);
  CHECK(r.cases >= kCases);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("nf is multiplicative") {
  for (const std::string& name : builtin_examples()) {
    const Algebra a(builtin(name));
    report(check_nf_morphism(a, kSeed, kCases, 6));
  }
}

TEST_CASE("nf agrees with straightforward straightening on random words") {
  std::mt19937_64 rng(kSeed);
  for (const std::string& name : builtin_examples()) {
    const Algebra a(builtin(name));
    oracle::NaiveRewriter naive(a.presentation());
    for (std::size_t i = 0; i < kCases; ++i) {
      const std::vector<int> w = random_word(a.alphabet(), rng, 6);
      oracle::FreePoly expected = naive.word(w);
      oracle::FreePoly got;
      for (const auto& [m, c] : a.normal_form(a.free_word(w))) oracle::add(got, m.letters(), c);
      CHECK_MESSAGE(got == expected, name);
    }
  }
}

TEST_CASE("Delta is multiplicative") {
  for (const std::string& name : kHopfBuiltins) report(check_coproduct_morphism(HopfAlgebra(builtin(name)), kSeed, kCases, 5));
}

TEST_CASE("antipode axioms on every monomial and on random elements") {
  for (const std::string& name : kHopfBuiltins) {
    const HopfAlgebra h(builtin(name));
    const AntipodeTable s = antipode_candidate(h);
    const AntipodeReport exhaustive = verify_antipode(h, s, 6);
    CHECK_MESSAGE(exhaustive.passed(), name);
    CHECK(exhaustive.monomials_checked > 0);
    report(check_antipode_axiom(h, s, kSeed, kCases, 6));
  }
}

TEST_CASE("built-ins are confluent") {
  for (const std::string& name : builtin_examples()) CHECK_MESSAGE(confluence_check(Algebra(builtin(name))).confluent(), name);
}

TEST_CASE("random brackets are confluent exactly when Jacobi holds") {
  // Four weight-one letters with [g_j, g_i] a sparse random combination of
  // letters; the diamond condition reduces to the Jacobi identity.
  constexpr int n = 4;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> coef(-1, 1), sparse(0, 5);
  std::size_t confluent = 0, broken = 0;
  for (std::size_t trial = 0; trial < kCases; ++trial) {
    // c[j][i][k]: coefficient of g_k in [g_j, g_i] for j > i.
    std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
    Presentation p("random", Alphabet{{"p", 1}, {"q", 1}, {"r", 1}, {"s", 1}});
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        PBWElement tail;
        for (int k = 0; k < n; ++k)
          if (sparse(rng) == 0) {
            const int v = coef(rng);
            c[j][i][k] = v;
            c[i][j][k] = -v;
            tail.add_term(p.letter(k), v);
          }
        p.set_relation({j, i, 1, tail});
      }
    auto bracket = [&](const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
      std::vector<mpq_class> out(n, 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (x[a] != 0 && y[b] != 0)
            for (int k = 0; k < n; ++k) out[k] += x[a] * y[b] * c[a][b][k];
      return out;
    };
    auto unit = [&](int g) {
      std::vector<mpq_class> e(n, 0);
      e[g] = 1;
      return e;
    };
    bool jacobi = true;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          const auto t1 = bracket(bracket(unit(x), unit(y)), unit(z));
          const auto t2 = bracket(bracket(unit(y), unit(z)), unit(x));
          const auto t3 = bracket(bracket(unit(z), unit(x)), unit(y));
          for (int k = 0; k < n; ++k) jacobi = jacobi && t1[k] + t2[k] + t3[k] == 0;
        }
    const bool ok = confluence_check(Algebra(p)).confluent();
    CHECK(ok == jacobi);
    (ok ? confluent : broken)++;
  }
  CHECK(confluent > 0);
  CHECK(broken > 0);
}

TEST_CASE("coradical levels are nested") {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& [name, w] : std::vector<std::pair<std::string, int>>{{"L", 6}, {"J", 5}, {"heis3", 6}, {"H6", 4}}) {
    const HopfAlgebra h(builtin(name));
    const CoradicalLevels c = coradical_levels(h, w);
    std::size_t cases = 0;
    for (std::size_t n = 1; n < c.levels.size(); ++n) CHECK(c.levels[n].contains(c.levels[n - 1]));
    while (cases < kCases) {
      for (std::size_t n = 2; n < c.levels.size(); ++n) {
        const auto basis = c.levels[n - 1].basis();
        SparseVector v;
        for (const auto& b : basis) add_scaled(v, b, Rational(coef(rng)));
        CHECK(c.levels[n].contains(v));
        ++cases;
      }
      if (c.levels.size() <= 2) break;
    }
    CHECK_MESSAGE(cases >= kCases, name);
  }
}
