#include "hopfkit/presentation.hpp"

namespace hopfkit {

Presentation::Presentation(std::string name, Alphabet alphabet)
    : name_(std::move(name)), alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))) {}

int Presentation::find_generator(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet_->size(); ++i)
    if ((*alphabet_)[i].name == name) return static_cast<int>(i);
  return -1;
}

int Presentation::generator_index(const std::string& name) const {
  int i = find_generator(name);
  if (i < 0) throw Error(ErrorKind::UnknownGenerator, "'" + name + "'");
  return i;
}

void Presentation::set_relation(Relation relation) {
  const int n = static_cast<int>(generator_count());
  if (relation.hi <= relation.lo || relation.lo < 0 || relation.hi >= n)
    throw Error(ErrorKind::InvalidGenerator, "relation pair must satisfy 0 <= lo < hi < generator count");
  relations_[{relation.hi, relation.lo}] = std::move(relation);
}

bool Presentation::has_relation(int hi, int lo) const { return relations_.contains({hi, lo}); }

Relation Presentation::relation(int hi, int lo) const {
  auto it = relations_.find({hi, lo});
  if (it != relations_.end()) return it->second;
  return Relation{hi, lo, Rational(1), {}};
}

std::vector<Relation> Presentation::relations() const {
  std::vector<Relation> out;
  for (const auto& entry : relations_) out.push_back(entry.second);
  return out;
}

std::vector<Relation> Presentation::nontrivial_relations() const {
  std::vector<Relation> out;
  for (const auto& entry : relations_)
    if (!entry.second.is_trivial()) out.push_back(entry.second);
  return out;
}

PBWElement Presentation::rekey(const PBWElement& x) const {
  PBWElement out;
  for (const auto& [m, c] : x) out.add_term(Word(m.letters(), *alphabet_), c);
  return out;
}

Presentation Presentation::with_weights(const std::vector<int>& weights) const {
  if (weights.size() != generator_count())
    throw Error(ErrorKind::InvalidGenerator, "weight list length differs from generator count");
  Alphabet alphabet = *alphabet_;
  for (std::size_t i = 0; i < alphabet.size(); ++i) alphabet[i].weight = weights[i];
  Presentation out(name_, std::move(alphabet));
  for (const auto& entry : relations_) {
    Relation r = entry.second;
    r.tail = out.rekey(r.tail);
    out.set_relation(std::move(r));
  }
  if (coproduct_) {
    CoproductData data;
    for (const auto& delta : coproduct_->delta) {
      TensorElement t;
      for (const auto& [key, c] : delta)
        t.add_term({out.monomial(key.first.letters()), out.monomial(key.second.letters())}, c);
      data.delta.push_back(std::move(t));
    }
    out.set_coproduct(std::move(data));
  }
  return out;
}

bool operator==(const Presentation& x, const Presentation& y) {
  if (x.alphabet() != y.alphabet() || x.coproduct_ != y.coproduct_) return false;
  // Explicit commuting entries are equivalent to absent ones.
  return x.nontrivial_relations() == y.nontrivial_relations();
}

FreeElement relation_element(const Presentation& p, const Relation& r) {
  Combination<Word> terms;
  terms.add_term(p.monomial({r.lo, r.hi}), r.q);
  terms.add_term(p.monomial({r.hi, r.lo}), Rational(-1));
  terms += r.tail;
  return FreeElement(p.alphabet_ptr(), std::move(terms));
}

std::string relation_name(const Presentation& p, const Relation& r) {
  const auto& alphabet = p.alphabet();
  if (r.q != 1) return render(relation_element(p, r));
  std::string bracket = "[" + alphabet[r.lo].name + "," + alphabet[r.hi].name + "]";
  if (r.tail.is_zero()) return bracket;
  PBWElement value = -r.tail;
  std::string text = render(value, alphabet);
  bool bare = value.size() == 1 && value.begin()->second == 1;
  return bracket + "-" + (bare ? text : "(" + text + ")");
}

namespace {

std::string component(const Word& w, const Alphabet& alphabet) {
  return w.empty() ? "1" : render_word(w, alphabet);
}

}  // namespace

std::string render(const TensorElement& x, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [key, c] : x)
    terms.emplace_back(c, component(key.first, alphabet) + " (x) " + component(key.second, alphabet));
  return render_terms(terms);
}

std::string render(const Tensor3Element& x, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [key, c] : x)
    terms.emplace_back(c, component(key[0], alphabet) + " (x) " + component(key[1], alphabet) + " (x) " +
                              component(key[2], alphabet));
  return render_terms(terms);
}

}  // namespace hopfkit
