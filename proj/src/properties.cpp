#include "hopfkit/properties.hpp"

namespace hopfkit {

std::vector<int> random_word(const Alphabet& alphabet, std::mt19937_64& rng, int max_weight) {
  std::vector<int> letters;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(1, std::max(1, max_weight));
  const int target = length(rng);
  int weight = 0;
  for (int attempt = 0; attempt < 4 * target; ++attempt) {
    const int g = static_cast<int>(pick(rng));
    if (weight + alphabet[g].weight > target) continue;
    letters.push_back(g);
    weight += alphabet[g].weight;
  }
  return letters;
}

PBWElement random_element(const Algebra& algebra, std::mt19937_64& rng, int max_weight, int max_terms) {
  const std::vector<Word> basis = enumerate_basis(algebra, max_weight);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  PBWElement x;
  for (int n = count(rng); n > 0; --n) x.add_term(basis[pick(rng)], Rational(coefficient(rng)));
  return x;
}

PropertyResult check_nf_morphism(const Algebra& algebra, std::uint64_t seed, std::size_t cases, int max_weight) {
  PropertyResult result{"nf morphism", 0, {}};
  std::mt19937_64 rng(seed);
  const Alphabet& alpha = algebra.alphabet();
  for (std::size_t i = 0; i < cases; ++i, ++result.cases) {
    std::vector<int> u = random_word(alpha, rng, max_weight / 2 + 1);
    std::vector<int> v = random_word(alpha, rng, max_weight / 2 + 1);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const PBWElement direct = algebra.normal_form(algebra.free_word(uv));
    const PBWElement routed = algebra.multiply(algebra.normal_form(algebra.free_word(u)),
                                               algebra.normal_form(algebra.free_word(v)));
    if (direct != routed)
      result.failures.push_back("nf(" + render_word(Word(uv, alpha), alpha) + "): " + render(direct, alpha) +
                                " vs " + render(routed, alpha));
    const PBWElement x = random_element(algebra, rng, max_weight / 3 + 1);
    const PBWElement y = random_element(algebra, rng, max_weight / 3 + 1);
    const PBWElement z = random_element(algebra, rng, max_weight / 3 + 1);
    if (algebra.multiply(algebra.multiply(x, y), z) != algebra.multiply(x, algebra.multiply(y, z)))
      result.failures.push_back("(xy)z != x(yz) for x=" + render(x, alpha) + ", y=" + render(y, alpha) +
                                ", z=" + render(z, alpha));
  }
  return result;
}

PropertyResult check_coproduct_morphism(const HopfAlgebra& h, std::uint64_t seed, std::size_t cases, int max_weight) {
  PropertyResult result{"coproduct morphism", 0, {}};
  std::mt19937_64 rng(seed);
  const Algebra& algebra = h.algebra();
  for (std::size_t i = 0; i < cases; ++i, ++result.cases) {
    const PBWElement x = random_element(algebra, rng, max_weight / 2);
    const PBWElement y = random_element(algebra, rng, max_weight / 2);
    const TensorElement left = h.coproduct(algebra.multiply(x, y));
    const TensorElement right = h.tensor_multiply(h.coproduct(x), h.coproduct(y));
    if (left != right)
      result.failures.push_back("Delta(xy) != Delta(x)Delta(y) for x=" + render(x, h.alphabet()) +
                                ", y=" + render(y, h.alphabet()));
  }
  return result;
}

PropertyResult check_antipode_axiom(const HopfAlgebra& h, const AntipodeTable& table, std::uint64_t seed,
                                    std::size_t cases, int max_weight) {
  PropertyResult result{"antipode axiom", 0, {}};
  std::mt19937_64 rng(seed);
  const Algebra& algebra = h.algebra();
  const Alphabet& alpha = h.alphabet();
  for (std::size_t i = 0; i < cases; ++i, ++result.cases) {
    const PBWElement x = random_element(algebra, rng, max_weight);
    PBWElement left, right;
    for (const auto& [key, c] : h.coproduct(x)) {
      left.add_scaled(algebra.multiply(apply_antipode(h, table, PBWElement(key.first, 1)), PBWElement(key.second, 1)), c);
      right.add_scaled(algebra.multiply(PBWElement(key.first, 1), apply_antipode(h, table, PBWElement(key.second, 1))), c);
    }
    const PBWElement expected = PBWElement::scalar(h.counit(x));
    if (left != expected || right != expected)
      result.failures.push_back("antipode axiom fails on " + render(x, alpha));
    const PBWElement y = random_element(algebra, rng, max_weight / 2);
    const PBWElement z = random_element(algebra, rng, max_weight / 2);
    if (apply_antipode(h, table, algebra.multiply(y, z)) !=
        algebra.multiply(apply_antipode(h, table, z), apply_antipode(h, table, y)))
      result.failures.push_back("S(yz) != S(z)S(y) for y=" + render(y, alpha) + ", z=" + render(z, alpha));
  }
  return result;
}

}  // namespace hopfkit
