#include "hopfkit/pbw.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <tuple>

namespace hopfkit {

int MonomialOrder::tie_weight(const Word& w) const {
  if (tie_weights.empty()) return 0;
  int total = 0;
  for (int letter : w.letters()) total += tie_weights.at(letter);
  return total;
}

bool MonomialOrder::less(const Word& x, const Word& y) const {
  if (x.weight() != y.weight()) return x.weight() < y.weight();
  if (int a = tie_weight(x), b = tie_weight(y); a != b) return a < b;
  return x.letters() < y.letters();
}

namespace {

struct TailConstraint {
  Word tail;
  Word head;
  std::string relation;
};

bool satisfies(const MonomialOrder& order, const std::vector<TailConstraint>& constraints) {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const TailConstraint& t) { return order.less(t.tail, t.head); });
}

// Candidate secondary weightings in {0..bound}^n, by total then lexicographically.
std::vector<std::vector<int>> tie_candidates(std::size_t n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[n - 1 - i] == bound) v[n - 1 - i++] = 0;
    if (i == n) break;
    ++v[n - 1 - i];
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int sx = 0, sy = 0;
    for (int e : x) sx += e;
    for (int e : y) sy += e;
    return sx < sy;
  });
  return out;
}

MonomialOrder choose_order(const Alphabet& alphabet, const std::vector<TailConstraint>& constraints) {
  MonomialOrder plain;
  if (satisfies(plain, constraints)) return plain;
  const std::size_t n = alphabet.size();
  for (int bound : {1, 2}) {
    if (n > (bound == 1 ? 16u : 10u)) break;
    for (auto& v : tie_candidates(n, bound)) {
      MonomialOrder order{std::move(v)};
      if (satisfies(order, constraints)) return order;
    }
  }
  for (const auto& t : constraints)
    if (!plain.less(t.tail, t.head))
      throw Error(ErrorKind::TailNotSmaller, "relation " + t.relation + ": tail monomial " +
                                                 render_word(t.tail, alphabet) + " is not below " +
                                                 render_word(t.head, alphabet) + " in any weight-refined order");
  return plain;
}

}  // namespace

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport report;
  const Alphabet& alphabet = p.alphabet();
  std::set<std::string> names;
  for (const auto& g : alphabet) {
    if (g.weight < 1)
      throw Error(ErrorKind::InvalidGenerator, "generator '" + g.name + "' has weight < 1");
    if (g.name.empty()) throw Error(ErrorKind::InvalidGenerator, "empty generator name");
    if (!names.insert(g.name).second)
      throw Error(ErrorKind::InvalidGenerator, "duplicate generator name '" + g.name + "'");
  }
  bool any_drop = false;
  std::vector<TailConstraint> constraints;
  for (const Relation& r : p.relations()) {
    const std::string name = relation_name(p, r);
    if (sgn(r.q) == 0) throw Error(ErrorKind::ZeroQ, "relation " + name);
    Word head = p.monomial({r.hi, r.lo});
    for (const auto& [m, c] : r.tail) {
      Word t(m.letters(), alphabet);
      if (!t.is_ordered())
        throw Error(ErrorKind::TailNotNormal, "relation " + name + ": tail monomial " + render_word(t, alphabet));
      if (t.weight() > head.weight())
        throw Error(ErrorKind::TailNotSmaller,
                    "relation " + name + ": tail monomial " + render_word(t, alphabet) + " outweighs " +
                        render_word(head, alphabet));
      if (t.weight() < head.weight())
        any_drop = true;
      else
        constraints.push_back({t, head, name});
    }
  }
  report.order = choose_order(alphabet, constraints);
  report.graded = !any_drop;
  report.notes.push_back(report.graded ? "weight-graded" : "weight-filtered");
  return report;
}

std::size_t max_terms_from_environment() {
  constexpr std::size_t fallback = 10'000'000;
  const char* raw = std::getenv("HOPFKIT_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

namespace {

struct RewriteLess {
  const MonomialOrder* order;
  bool operator()(const Word& x, const Word& y) const { return order->less(x, y); }
};

void accumulate(std::map<Word, Rational, RewriteLess>& work, Word w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = work.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) work.erase(it);
  }
}

}  // namespace

Algebra::Algebra(Presentation p)
    : presentation_(std::move(p)),
      validation_(validate_presentation(presentation_)),
      max_terms_(max_terms_from_environment()) {
  const int n = static_cast<int>(generator_count());
  table_.resize(n);
  for (int hi = 0; hi < n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      Relation r = presentation_.relation(hi, lo);
      r.tail = presentation_.rekey(r.tail);
      table_[hi].push_back(std::move(r));
    }
  }
}

Algebra::Algebra(const Algebra& other)
    : presentation_(other.presentation_),
      validation_(other.validation_),
      table_(other.table_),
      max_terms_(other.max_terms_) {
  std::lock_guard lock(other.cache_mutex_);
  generator_cache_ = other.generator_cache_;
}

PBWElement Algebra::generator(int index) const {
  return PBWElement(presentation_.letter(index), Rational(1));
}

FreeElement Algebra::free_word(const std::vector<int>& letters) const {
  return FreeElement::word(presentation_.alphabet_ptr(), letters);
}

void Algebra::check_size(std::size_t n) const {
  if (n > max_terms_)
    throw Error(ErrorKind::Resource, "intermediate term count " + std::to_string(n) +
                                         " exceeds HOPFKIT_MAX_TERMS=" + std::to_string(max_terms_));
}

PBWElement Algebra::normal_form(const FreeElement& x) const {
  if (x.alphabet_ptr() != presentation_.alphabet_ptr() && x.alphabet() != alphabet())
    throw Error(ErrorKind::AlphabetMismatch, "element does not belong to presentation " + presentation_.name());
  const Alphabet& alpha = alphabet();
  std::map<Word, Rational, RewriteLess> work(RewriteLess{&validation_.order});
  for (const auto& [w, c] : x.terms()) accumulate(work, Word(w.letters(), alpha), c);

  PBWElement result;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word w = top->first;
    Rational c = top->second;
    work.erase(top);

    const auto& letters = w.letters();
    std::size_t p = 0;
    while (p + 1 < letters.size() && letters[p] <= letters[p + 1]) ++p;
    if (p + 1 >= letters.size()) {
      result.add_term(w, c);
      continue;
    }
    const Relation& r = table_[letters[p]][letters[p + 1]];
    auto rebuild = [&](const std::vector<int>& middle) {
      std::vector<int> out(letters.begin(), letters.begin() + p);
      out.insert(out.end(), middle.begin(), middle.end());
      out.insert(out.end(), letters.begin() + p + 2, letters.end());
      Word next(std::move(out), alpha);
      assert(validation_.order.less(next, w));
      return next;
    };
    accumulate(work, rebuild({r.lo, r.hi}), c * r.q);
    for (const auto& [t, ct] : r.tail) accumulate(work, rebuild(t.letters()), c * ct);
    check_size(work.size() + result.size());
  }
  return result;
}

const PBWElement& Algebra::monomial_times_generator(const Word& m, int g) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = generator_cache_.find({m, g});
    if (it != generator_cache_.end()) return it->second;
  }
  const Alphabet& alpha = alphabet();
  PBWElement result;
  if (m.empty() || m.letters().back() <= g) {
    std::vector<int> letters = m.letters();
    letters.push_back(g);
    result.add_term(Word(std::move(letters), alpha), Rational(1));
  } else {
    // m = m' h with h > g:  m' (h g) = q (m' g) h + m' tail
    const int h = m.letters().back();
    Word prefix = m.slice(0, m.length() - 1, alpha);
    const Relation& r = table_[h][g];
    result = r.q * multiply_by_generator(monomial_times_generator(prefix, g), h);
    for (const auto& [t, ct] : r.tail) result.add_scaled(multiply_monomials(prefix, t), ct);
  }
  check_size(result.size());
  std::lock_guard lock(cache_mutex_);
  return generator_cache_.try_emplace({m, g}, std::move(result)).first->second;
}

PBWElement Algebra::multiply_by_generator(const PBWElement& x, int g) const {
  PBWElement out;
  for (const auto& [m, c] : x) out.add_scaled(monomial_times_generator(m, g), c);
  check_size(out.size());
  return out;
}

PBWElement Algebra::multiply_monomials(const Word& u, const Word& v) const {
  PBWElement acc(u, Rational(1));
  for (int letter : v.letters()) acc = multiply_by_generator(acc, letter);
  return acc;
}

PBWElement Algebra::multiply(const PBWElement& x, const PBWElement& y) const {
  PBWElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add_scaled(multiply_monomials(u, v), cu * cv);
  check_size(out.size());
  return out;
}

PBWElement Algebra::normal_form_word(const Word& w) const {
  return multiply_monomials(Word(), w);
}

PBWElement normal_form(const Algebra& algebra, const FreeElement& x) { return algebra.normal_form(x); }

PBWElement commutator(const Algebra& algebra, const PBWElement& x, const PBWElement& y) {
  return algebra.multiply(x, y) - algebra.multiply(y, x);
}

ConfluenceReport confluence_check(const Algebra& algebra) {
  ConfluenceReport report;
  const Presentation& p = algebra.presentation();
  const int n = static_cast<int>(p.generator_count());
  const auto& alphabet = p.alphabet_ptr();
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        ++report.triples_checked;
        const Relation kj = p.relation(k, j);
        const Relation ji = p.relation(j, i);
        // (g_k g_j) g_i first
        Combination<Word> left(p.monomial({j, k, i}), kj.q);
        left += concat_product(p.rekey(kj.tail), Combination<Word>(p.letter(i), Rational(1)));
        // g_k (g_j g_i) first
        Combination<Word> right(p.monomial({k, i, j}), ji.q);
        right += concat_product(Combination<Word>(p.letter(k), Rational(1)), p.rekey(ji.tail));
        PBWElement diff = algebra.normal_form(FreeElement(alphabet, left)) -
                          algebra.normal_form(FreeElement(alphabet, right));
        if (!diff.is_zero()) report.failures.push_back({k, j, i, std::move(diff)});
      }
    }
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& x, const auto& y) {
    return std::tie(x.k, x.j, x.i) < std::tie(y.k, y.j, y.i);
  });
  return report;
}

void require_confluent(const Algebra& algebra) {
  ConfluenceReport report = confluence_check(algebra);
  if (report.confluent()) return;
  const auto& f = report.failures.front();
  const auto& alphabet = algebra.alphabet();
  throw Error(ErrorKind::NotConfluent, "overlap " + alphabet[f.k].name + alphabet[f.j].name + alphabet[f.i].name +
                                           " leaves residual " + render(f.difference, alphabet));
}

std::vector<Word> enumerate_monomials(const Alphabet& alphabet, int max_weight) {
  std::vector<Word> out;
  std::vector<int> letters;
  // Letters are appended in nondecreasing index order.
  auto recurse = [&](auto&& self, std::size_t from, int remaining) -> void {
    out.emplace_back(letters, alphabet);
    for (std::size_t g = from; g < alphabet.size(); ++g) {
      if (alphabet[g].weight > remaining) continue;
      letters.push_back(static_cast<int>(g));
      self(self, g, remaining - alphabet[g].weight);
      letters.pop_back();
    }
  };
  if (max_weight >= 0) recurse(recurse, 0, max_weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_basis(const Algebra& algebra, int max_weight) {
  return enumerate_monomials(algebra.alphabet(), max_weight);
}

}  // namespace hopfkit
