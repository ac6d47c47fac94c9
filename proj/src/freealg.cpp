#include "hopfkit/freealg.hpp"

#include <algorithm>

namespace hopfkit {

Word::Word(std::vector<int> letters, const Alphabet& alphabet)
    : weight_(word_weight(letters, alphabet)), letters_(std::move(letters)) {}

bool Word::is_ordered() const noexcept {
  return std::is_sorted(letters_.begin(), letters_.end());
}

Word Word::operator*(const Word& other) const {
  Word out = *this;
  out.weight_ += other.weight_;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::slice(std::size_t from, std::size_t to, const Alphabet& alphabet) const {
  return Word(std::vector<int>(letters_.begin() + from, letters_.begin() + to), alphabet);
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.weight_ <=> y.weight_; c != 0) return c;
  if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
  return x.letters_ <=> y.letters_;
}

int word_weight(const std::vector<int>& letters, const Alphabet& alphabet) {
  int total = 0;
  for (int letter : letters) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= alphabet.size())
      throw Error(ErrorKind::InvalidGenerator, "letter index " + std::to_string(letter));
    total += alphabet[letter].weight;
  }
  return total;
}

std::vector<int> exponents(const Word& monomial, std::size_t generator_count) {
  std::vector<int> exps(generator_count, 0);
  for (int letter : monomial.letters()) ++exps.at(letter);
  return exps;
}

Word monomial_from_exponents(const std::vector<int>& exps, const Alphabet& alphabet) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < exps.size(); ++i)
    letters.insert(letters.end(), exps[i], static_cast<int>(i));
  return Word(std::move(letters), alphabet);
}

FreeElement FreeElement::word(std::shared_ptr<const Alphabet> alphabet, const std::vector<int>& letters,
                              const Rational& coefficient) {
  Word w(letters, *alphabet);
  return FreeElement(std::move(alphabet), Combination<Word>(w, coefficient));
}

namespace {

void require_same_alphabet(const FreeElement& x, const FreeElement& y) {
  if (x.alphabet_ptr() != y.alphabet_ptr() && x.alphabet() != y.alphabet())
    throw Error(ErrorKind::AlphabetMismatch, "free algebra operands use different alphabets");
}

}  // namespace

FreeElement free_add(const FreeElement& x, const FreeElement& y) {
  require_same_alphabet(x, y);
  return FreeElement(x.alphabet_ptr(), x.terms() + y.terms());
}

Combination<Word> concat_product(const Combination<Word>& x, const Combination<Word>& y) {
  Combination<Word> out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add_term(u * v, cu * cv);
  return out;
}

FreeElement free_mul(const FreeElement& x, const FreeElement& y) {
  require_same_alphabet(x, y);
  return FreeElement(x.alphabet_ptr(), concat_product(x.terms(), y.terms()));
}

FreeElement free_scale(const FreeElement& x, const Rational& factor) {
  return FreeElement(x.alphabet_ptr(), factor * x.terms());
}

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [c, mono] : terms) {
    Rational magnitude = abs(c);
    if (leading) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + " ";
      out += mono;
    }
    leading = false;
  }
  return out;
}

std::string render_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out += alphabet.at(letters[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string render(const Combination<Word>& x, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.emplace_back(it->second, render_word(it->first, alphabet));
  return render_terms(terms);
}

std::string render(const FreeElement& x) { return render(x.terms(), x.alphabet()); }

}  // namespace hopfkit
