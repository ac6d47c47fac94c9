#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

/// Words compared by weight, then by a secondary letter weighting, then
/// lexicographically by generator index.
struct MonomialOrder {
  std::vector<int> tie_weights;  // empty means all zero

  int tie_weight(const Word& w) const;
  bool less(const Word& x, const Word& y) const;
};

struct ValidationReport {
  /// Every relation tail has exactly the weight of its head.
  bool graded = true;
  /// The first secondary weighting, all zeros tried first, under which every
  /// tail monomial lies below its head.
  MonomialOrder order;
  std::vector<std::string> notes;
};

/// Checks weights, tail order and shape; throws on the first violation.
ValidationReport validate_presentation(const Presentation& p);

/// Upper bound on intermediate term counts, read from HOPFKIT_MAX_TERMS.
std::size_t max_terms_from_environment();

/// A validated presentation together with its rewriting machinery.
///
/// Construction runs validate_presentation. Products of ordered monomials by
/// single generators are memoized; the cache is internal and guarded, so an
/// Algebra may be shared across threads.
class Algebra {
 public:
  explicit Algebra(Presentation p);
  Algebra(const Algebra& other);
  Algebra& operator=(const Algebra&) = delete;

  const Presentation& presentation() const { return presentation_; }
  const Alphabet& alphabet() const { return presentation_.alphabet(); }
  std::size_t generator_count() const { return presentation_.generator_count(); }
  bool graded() const { return validation_.graded; }
  const MonomialOrder& order() const { return validation_.order; }
  const ValidationReport& validation() const { return validation_; }

  PBWElement generator(int index) const;
  PBWElement one() const { return PBWElement::scalar(Rational(1)); }
  FreeElement free_word(const std::vector<int>& letters) const;

  /// Normal form by direct rewriting: the order-largest reducible term is
  /// straightened first, at its leftmost descent.
  PBWElement normal_form(const FreeElement& x) const;
  PBWElement normal_form_word(const Word& w) const;

  /// Product of normal forms, computed through the memoized generator action.
  PBWElement multiply(const PBWElement& x, const PBWElement& y) const;
  PBWElement multiply_monomials(const Word& u, const Word& v) const;
  PBWElement multiply_by_generator(const PBWElement& x, int g) const;

  std::size_t max_terms() const { return max_terms_; }

 private:
  const PBWElement& monomial_times_generator(const Word& m, int g) const;
  void check_size(std::size_t n) const;

  Presentation presentation_;
  ValidationReport validation_;
  std::vector<std::vector<Relation>> table_;  // table_[hi][lo]
  std::size_t max_terms_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Word, int>, PBWElement> generator_cache_;
};

PBWElement normal_form(const Algebra& algebra, const FreeElement& x);
PBWElement commutator(const Algebra& algebra, const PBWElement& x, const PBWElement& y);

struct AmbiguityResult {
  int k = 0, j = 0, i = 0;  // overlap word g_k g_j g_i with k > j > i
  PBWElement difference;    // (g_k g_j) g_i minus g_k (g_j g_i), both normal-formed
};

struct ConfluenceReport {
  std::size_t triples_checked = 0;
  std::vector<AmbiguityResult> failures;  // sorted by triple
  bool confluent() const { return failures.empty(); }
};

/// Resolves every overlap g_k g_j g_i both ways. On success the ordered
/// monomials are a basis.
ConfluenceReport confluence_check(const Algebra& algebra);

/// Throws NotConfluent with the first residual when the check fails.
void require_confluent(const Algebra& algebra);

/// Ordered monomials of weight <= max_weight in canonical order, starting
/// with the empty monomial.
std::vector<Word> enumerate_basis(const Algebra& algebra, int max_weight);
std::vector<Word> enumerate_monomials(const Alphabet& alphabet, int max_weight);

}  // namespace hopfkit
