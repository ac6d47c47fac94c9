#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace hopfkit {

namespace {

Presentation checked_coproduct(Presentation p) {
  if (!p.coproduct())
    throw Error(ErrorKind::NoCoproductAttached, "presentation " + p.name() + " has no coproduct");
  for (const Relation& r : p.relations())
    if (r.q != 1)
      throw Error(ErrorKind::QSkewRejected, "relation " + relation_name(p, r) + " has q = " + r.q.get_str() +
                                                "; no Hopf structure is admitted");
  if (p.coproduct()->delta.size() != p.generator_count())
    throw Error(ErrorKind::BadCoproductShape, "coproduct table size differs from generator count");
  return p;
}

using FreeTensor = Combination<TensorKey>;

FreeTensor free_tensor_product(const FreeTensor& x, const FreeTensor& y) {
  FreeTensor out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) out.add_term({kx.first * ky.first, kx.second * ky.second}, cx * cy);
  return out;
}

// Delta' on the free algebra, extended multiplicatively from the generator values.
FreeTensor free_coproduct(const Presentation& p, const std::vector<TensorElement>& deltas, const Word& w) {
  FreeTensor acc({Word(), Word()}, Rational(1));
  for (int g : w.letters()) {
    FreeTensor dg({p.letter(g), Word()}, Rational(1));
    dg.add_term({Word(), p.letter(g)}, Rational(1));
    dg += deltas[g];
    acc = free_tensor_product(acc, dg);
  }
  return acc;
}

std::vector<TensorElement> rekeyed_deltas(const Presentation& p) {
  std::vector<TensorElement> out;
  for (const auto& delta : p.coproduct()->delta) {
    TensorElement t;
    for (const auto& [key, c] : delta)
      t.add_term({p.monomial(key.first.letters()), p.monomial(key.second.letters())}, c);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(Presentation p) : HopfAlgebra(Algebra(checked_coproduct(std::move(p)))) {}

HopfAlgebra::HopfAlgebra(const Algebra& algebra) : algebra_(algebra) {
  checked_coproduct(algebra_.presentation());
  deltas_ = rekeyed_deltas(algebra_.presentation());
  validate_shape();
}

HopfAlgebra::HopfAlgebra(const HopfAlgebra& other) : algebra_(other.algebra_), deltas_(other.deltas_) {
  std::lock_guard lock(other.cache_mutex_);
  coproduct_cache_ = other.coproduct_cache_;
}

void HopfAlgebra::validate_shape() const {
  const Alphabet& alpha = alphabet();
  for (std::size_t g = 0; g < deltas_.size(); ++g) {
    for (const auto& [key, c] : deltas_[g]) {
      const auto& [u, v] = key;
      std::string where = "delta(" + alpha[g].name + ") term " + render(TensorElement(key, c), alpha);
      if (u.empty() || v.empty())
        throw Error(ErrorKind::BadCoproductShape, where + " has a constant factor");
      if (!u.is_ordered() || !v.is_ordered())
        throw Error(ErrorKind::BadCoproductShape, where + " is not in normal form");
      if (u.weight() >= alpha[g].weight || v.weight() >= alpha[g].weight)
        throw Error(ErrorKind::BadCoproductShape, where + " has a factor of weight >= weight(" + alpha[g].name + ")");
    }
  }
}

TensorElement tensor(const PBWElement& x, const PBWElement& y) {
  TensorElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add_term({u, v}, cu * cv);
  return out;
}

Tensor3Element tensor3(const PBWElement& x, const PBWElement& y, const PBWElement& z) {
  Tensor3Element out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y)
      for (const auto& [w, cw] : z) out.add_term({u, v, w}, cu * cv * cw);
  return out;
}

TensorElement HopfAlgebra::tensor_multiply(const TensorElement& x, const TensorElement& y) const {
  TensorElement out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      PBWElement left = algebra_.multiply_monomials(kx.first, ky.first);
      PBWElement right = algebra_.multiply_monomials(kx.second, ky.second);
      Rational c = cx * cy;
      for (const auto& [u, cu] : left)
        for (const auto& [v, cv] : right) out.add_term({u, v}, c * cu * cv);
    }
  }
  return out;
}

const TensorElement& HopfAlgebra::coproduct_monomial(const Word& m) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = coproduct_cache_.find(m);
    if (it != coproduct_cache_.end()) return it->second;
  }
  TensorElement result;
  if (m.empty()) {
    result.add_term({Word(), Word()}, Rational(1));
  } else {
    const int g = m.letters().back();
    TensorElement dg = deltas_[g];
    dg.add_term({algebra_.presentation().letter(g), Word()}, Rational(1));
    dg.add_term({Word(), algebra_.presentation().letter(g)}, Rational(1));
    result = tensor_multiply(coproduct_monomial(m.slice(0, m.length() - 1, alphabet())), dg);
  }
  std::lock_guard lock(cache_mutex_);
  return coproduct_cache_.try_emplace(m, std::move(result)).first->second;
}

TensorElement HopfAlgebra::coproduct(const PBWElement& x) const {
  TensorElement out;
  for (const auto& [m, c] : x) out.add_scaled(coproduct_monomial(m), c);
  return out;
}

TensorElement HopfAlgebra::reduced_coproduct(const PBWElement& x) const {
  const PBWElement one = algebra_.one();
  return coproduct(x) - tensor(x, one) - tensor(one, x);
}

TensorElement coproduct(const HopfAlgebra& h, const PBWElement& x) { return h.coproduct(x); }
TensorElement reduced_coproduct(const HopfAlgebra& h, const PBWElement& x) { return h.reduced_coproduct(x); }

bool RelationCompatibilityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

RelationCompatibilityReport relation_compatibility(const Algebra& algebra, const std::vector<TensorElement>& deltas) {
  const Presentation& p = algebra.presentation();
  RelationCompatibilityReport report;
  const int n = static_cast<int>(p.generator_count());
  for (int hi = 0; hi < n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      Relation r = p.relation(hi, lo);
      FreeElement rel = relation_element(p, r);
      FreeTensor expanded;
      for (const auto& [w, c] : rel.terms()) expanded.add_scaled(free_coproduct(p, deltas, w), c);
      // nf (x) nf, whose kernel is I (x) F + F (x) I
      TensorElement residual;
      for (const auto& [key, c] : expanded) {
        PBWElement left = algebra.normal_form(FreeElement(p.alphabet_ptr(), Combination<Word>(key.first, 1)));
        PBWElement right = algebra.normal_form(FreeElement(p.alphabet_ptr(), Combination<Word>(key.second, 1)));
        residual.add_scaled(tensor(left, right), c);
      }
      report.checks.push_back({relation_name(p, r), residual.is_zero(), std::move(residual)});
    }
  }
  return report;
}

}  // namespace

RelationCompatibilityReport check_relation_compatibility(const HopfAlgebra& h) {
  std::vector<TensorElement> deltas;
  for (std::size_t g = 0; g < h.alphabet().size(); ++g) deltas.push_back(h.generator_delta(static_cast<int>(g)));
  return relation_compatibility(h.algebra(), deltas);
}

bool CoassociativityReport::passed() const {
  return monomial_failures.empty() &&
         std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.passed(); });
}

CoassociativityReport check_coassociativity(const HopfAlgebra& h, int sample_weight) {
  CoassociativityReport report;
  const Alphabet& alpha = h.alphabet();
  for (std::size_t g = 0; g < alpha.size(); ++g) {
    CoassociativityCheck check{alpha[g].name, {}, {}};
    for (const auto& [key, c] : h.generator_delta(static_cast<int>(g))) {
      PBWElement u(key.first, Rational(1));
      PBWElement v(key.second, Rational(1));
      for (const auto& [k2, c2] : h.reduced_coproduct(u))
        check.left.add_term({k2.first, k2.second, key.second}, c * c2);
      for (const auto& [k2, c2] : h.reduced_coproduct(v))
        check.right.add_term({key.first, k2.first, k2.second}, c * c2);
    }
    report.generators.push_back(std::move(check));
  }
  for (const Word& m : enumerate_basis(h.algebra(), sample_weight)) {
    ++report.monomials_checked;
    Tensor3Element left, right;
    for (const auto& [key, c] : h.coproduct_monomial(m)) {
      for (const auto& [k2, c2] : h.coproduct_monomial(key.first))
        left.add_term({k2.first, k2.second, key.second}, c * c2);
      for (const auto& [k2, c2] : h.coproduct_monomial(key.second))
        right.add_term({key.first, k2.first, k2.second}, c * c2);
    }
    if (left != right) report.monomial_failures.push_back(render_word(m, alpha));
  }
  return report;
}

CounitReport check_counit(const HopfAlgebra& h) {
  CounitReport report;
  const Presentation& p = h.presentation();
  const int n = static_cast<int>(p.generator_count());
  for (int hi = 0; hi < n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      ++report.relations_checked;
      Relation r = p.relation(hi, lo);
      // eps vanishes on generators, so only the empty word survives
      Rational value = relation_element(p, r).terms().coefficient(Word());
      if (sgn(value) != 0)
        report.failures.push_back("eps(" + relation_name(p, r) + ") = " + value.get_str());
    }
  }
  for (int g = 0; g < n; ++g) {
    ++report.generators_checked;
    PBWElement left_side, right_side;
    for (const auto& [key, c] : h.coproduct(h.algebra().generator(g))) {
      if (key.first.empty()) left_side.add_term(key.second, c);
      if (key.second.empty()) right_side.add_term(key.first, c);
    }
    const PBWElement expected = h.algebra().generator(g);
    if (left_side != expected)
      report.failures.push_back("(eps (x) id) Delta(" + p.alphabet()[g].name + ") = " + render(left_side, p.alphabet()));
    if (right_side != expected)
      report.failures.push_back("(id (x) eps) Delta(" + p.alphabet()[g].name + ") = " +
                                render(right_side, p.alphabet()));
  }
  return report;
}

namespace {

class AntipodeMap {
 public:
  AntipodeMap(const HopfAlgebra& h, const AntipodeTable& table) : h_(h), table_(table) {}

  const PBWElement& monomial(const Word& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    PBWElement result = h_.algebra().one();
    if (!m.empty()) {
      // S(m' g) = S(g) S(m')
      const int g = m.letters().back();
      PBWElement rest = monomial(m.slice(0, m.length() - 1, h_.alphabet()));
      result = h_.algebra().multiply(table_.images.at(g), rest);
    }
    return cache_.emplace(m, std::move(result)).first->second;
  }

  PBWElement apply(const PBWElement& x) {
    PBWElement out;
    for (const auto& [m, c] : x) out.add_scaled(monomial(m), c);
    return out;
  }

 private:
  const HopfAlgebra& h_;
  const AntipodeTable& table_;
  std::map<Word, PBWElement> cache_;
};

}  // namespace

PBWElement apply_antipode(const HopfAlgebra& h, const AntipodeTable& table, const PBWElement& x) {
  AntipodeMap s(h, table);
  return s.apply(x);
}

AntipodeReport verify_antipode(const HopfAlgebra& h, const AntipodeTable& table, int weight_bound) {
  AntipodeReport report;
  report.weight_bound = weight_bound;
  AntipodeMap s(h, table);
  const Algebra& algebra = h.algebra();
  for (const Word& m : enumerate_basis(algebra, weight_bound)) {
    ++report.monomials_checked;
    PBWElement left, right;
    for (const auto& [key, c] : h.coproduct_monomial(m)) {
      left.add_scaled(algebra.multiply(s.monomial(key.first), PBWElement(key.second, 1)), c);
      right.add_scaled(algebra.multiply(PBWElement(key.first, 1), s.monomial(key.second)), c);
    }
    const PBWElement expected = PBWElement::scalar(m.empty() ? Rational(1) : Rational(0));
    if (left != expected)
      report.failures.push_back("m(S (x) id) Delta(" + render_word(m, h.alphabet()) + ") = " +
                                render(left, h.alphabet()));
    if (right != expected)
      report.failures.push_back("m(id (x) S) Delta(" + render_word(m, h.alphabet()) + ") = " +
                                render(right, h.alphabet()));
  }
  return report;
}

AntipodeTable antipode_candidate(const HopfAlgebra& h) {
  const Alphabet& alpha = h.alphabet();
  const Algebra& algebra = h.algebra();
  std::vector<int> order(alpha.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return alpha[x].weight < alpha[y].weight; });

  AntipodeTable table;
  table.images.assign(alpha.size(), PBWElement());
  for (int g : order) {
    // Factors of delta(g) only involve generators of smaller weight, already solved.
    AntipodeMap s(h, table);
    PBWElement value = -algebra.generator(g);
    for (const auto& [key, c] : h.generator_delta(g))
      value.add_scaled(algebra.multiply(s.monomial(key.first), PBWElement(key.second, 1)), -c);
    table.images[g] = std::move(value);
  }
  return table;
}

AntipodeTable solve_antipode(const HopfAlgebra& h, int verify_weight) {
  AntipodeTable table = antipode_candidate(h);
  AntipodeReport report = verify_antipode(h, table, verify_weight);
  if (!report.passed()) throw Error(ErrorKind::AxiomFailure, report.failures.front());
  return table;
}

AntipodeReport check_involutive_antipode(const HopfAlgebra& h, const AntipodeTable& table, int weight_bound) {
  AntipodeReport report;
  report.weight_bound = weight_bound;
  AntipodeMap s(h, table);
  for (const Word& m : enumerate_basis(h.algebra(), weight_bound)) {
    ++report.monomials_checked;
    PBWElement twice = s.apply(s.monomial(m));
    if (twice != PBWElement(m, 1))
      report.failures.push_back("S(S(" + render_word(m, h.alphabet()) + ")) = " + render(twice, h.alphabet()));
  }
  return report;
}

bool is_primitive(const HopfAlgebra& h, const PBWElement& x) {
  if (sgn(h.counit(x)) != 0)
    throw Error(ErrorKind::NonzeroConstantTerm, "element " + render(x, h.alphabet()) + " has a constant term");
  return h.reduced_coproduct(x).is_zero();
}

}  // namespace hopfkit
