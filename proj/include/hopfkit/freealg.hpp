#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/rational.hpp"

namespace hopfkit {

struct Generator {
  std::string name;
  int weight = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list; a letter is an index into it.
using Alphabet = std::vector<Generator>;

/// A word in the free algebra with its total weight cached.
///
/// Words compare in canonical order: total weight, then length, then
/// lexicographically by generator index. Ordered monomials of a PBW algebra
/// are words with nondecreasing letters, so they share this type.
class Word {
 public:
  Word() = default;
  Word(std::vector<int> letters, const Alphabet& alphabet);

  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// True when letters are nondecreasing (an ordered PBW monomial).
  bool is_ordered() const noexcept;

  Word operator*(const Word& other) const;

  /// Splits off the half-open letter range [from, to).
  Word slice(std::size_t from, std::size_t to, const Alphabet& alphabet) const;

  friend std::strong_ordering operator<=>(const Word& x, const Word& y);
  friend bool operator==(const Word& x, const Word& y) {
    return x.weight_ == y.weight_ && x.letters_ == y.letters_;
  }

 private:
  int weight_ = 0;
  std::vector<int> letters_;
};

int word_weight(const std::vector<int>& letters, const Alphabet& alphabet);

/// Per-generator exponents of an ordered monomial.
std::vector<int> exponents(const Word& monomial, std::size_t generator_count);
Word monomial_from_exponents(const std::vector<int>& exps, const Alphabet& alphabet);

/// Finite linear combination with exact coefficients, zero terms never stored.
template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, Rational>;

  Combination() = default;
  Combination(const Key& key, const Rational& coefficient) { add_term(key, coefficient); }

  static Combination scalar(const Rational& c) { return Combination(Key{}, c); }

  void add_term(const Key& key, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Combination& other, const Rational& factor) {
    if (sgn(factor) == 0) return;
    for (const auto& [key, c] : other.terms_) add_term(key, c * factor);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Combination& operator+=(const Combination& other) {
    add_scaled(other, Rational(1));
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    add_scaled(other, Rational(-1));
    return *this;
  }
  Combination& operator*=(const Rational& factor) {
    if (sgn(factor) == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= factor;
    }
    return *this;
  }

  friend Combination operator+(Combination x, const Combination& y) { return x += y; }
  friend Combination operator-(Combination x, const Combination& y) { return x -= y; }
  friend Combination operator-(Combination x) { return x *= Rational(-1); }
  friend Combination operator*(const Rational& f, Combination x) { return x *= f; }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Terms terms_;
};

/// Element of an algebra in PBW normal form: a combination of ordered monomials.
using PBWElement = Combination<Word>;

/// Element of the free associative algebra over a fixed alphabet.
class FreeElement {
 public:
  explicit FreeElement(std::shared_ptr<const Alphabet> alphabet) : alphabet_(std::move(alphabet)) {}
  FreeElement(std::shared_ptr<const Alphabet> alphabet, Combination<Word> terms)
      : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {}

  static FreeElement word(std::shared_ptr<const Alphabet> alphabet, const std::vector<int>& letters,
                          const Rational& coefficient = Rational(1));

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const Combination<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  friend bool operator==(const FreeElement& x, const FreeElement& y) {
    return *x.alphabet_ == *y.alphabet_ && x.terms_ == y.terms_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  Combination<Word> terms_;
};

FreeElement free_add(const FreeElement& x, const FreeElement& y);
FreeElement free_mul(const FreeElement& x, const FreeElement& y);
FreeElement free_scale(const FreeElement& x, const Rational& factor);

/// Linear combination product by concatenation of keys.
Combination<Word> concat_product(const Combination<Word>& x, const Combination<Word>& y);

// Canonical text rendering.
/// Joins (coefficient, monomial text) pairs as `x - 2 y + 1/3 z`; an empty
/// monomial text stands for the unit.
std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms);
std::string render_word(const Word& w, const Alphabet& alphabet);
std::string render(const Combination<Word>& x, const Alphabet& alphabet);
std::string render(const FreeElement& x);

}  // namespace hopfkit
