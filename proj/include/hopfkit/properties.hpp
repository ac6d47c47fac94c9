#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Random letters of total weight <= max_weight.
std::vector<int> random_word(const Alphabet& alphabet, std::mt19937_64& rng, int max_weight);
/// Random combination of ordered monomials with small integer coefficients.
PBWElement random_element(const Algebra& algebra, std::mt19937_64& rng, int max_weight, int max_terms = 3);

/// For random words u, v: the rewriter's nf(uv) equals the product of nf(u)
/// and nf(v) through the memoized generator action, and random triples
/// multiply associatively.
PropertyResult check_nf_morphism(const Algebra& algebra, std::uint64_t seed, std::size_t cases, int max_weight);

/// Delta(xy) = Delta(x) Delta(y) on random elements.
PropertyResult check_coproduct_morphism(const HopfAlgebra& h, std::uint64_t seed, std::size_t cases, int max_weight);

/// Both antipode axioms and S(xy) = S(y) S(x) on random elements.
PropertyResult check_antipode_axiom(const HopfAlgebra& h, const AntipodeTable& table, std::uint64_t seed,
                                    std::size_t cases, int max_weight);

}  // namespace hopfkit
