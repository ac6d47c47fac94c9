#include "hopfkit/subspace.hpp"

#include <algorithm>

#include "hopfkit/grading.hpp"

namespace hopfkit {

void add_scaled(SparseVector& target, const SparseVector& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, fresh] = target.try_emplace(i, v * c);
    if (fresh) continue;
    it->second += v * c;
    if (it->second == 0) target.erase(it);
  }
}

MonomialIndex::MonomialIndex(const Alphabet& alphabet, int weight_bound, bool include_unit)
    : weight_bound_(weight_bound) {
  for (Word& m : enumerate_monomials(alphabet, weight_bound)) {
    if (!include_unit && m.length() == 0) continue;
    positions_.emplace(m, monomials_.size());
    monomials_.push_back(std::move(m));
  }
}

std::optional<std::size_t> MonomialIndex::find(const Word& m) const {
  auto it = positions_.find(m);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

SparseVector MonomialIndex::coordinates(const PBWElement& x) const {
  SparseVector out;
  for (const auto& [m, c] : x) {
    auto it = positions_.find(m);
    if (it == positions_.end())
      throw Error(ErrorKind::AmbientMismatch, "monomial of weight " + std::to_string(m.weight()) +
                                                  " lies outside the coordinate window (W=" +
                                                  std::to_string(weight_bound_) + ")");
    out.emplace(it->second, c);
  }
  return out;
}

PBWElement MonomialIndex::element(const SparseVector& v) const {
  PBWElement out;
  for (const auto& [i, c] : v) out.add_term(monomials_.at(i), c);
  return out;
}

int MonomialIndex::weight(const SparseVector& v) const {
  int w = 0;
  for (const auto& [i, c] : v) w = std::max(w, monomials_.at(i).weight());
  return w;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

void Subspace::check_ambient(const SparseVector& v) const {
  if (!v.empty() && v.rbegin()->first >= ambient_)
    throw Error(ErrorKind::AmbientMismatch, "coordinate " + std::to_string(v.rbegin()->first) +
                                                " outside ambient dimension " + std::to_string(ambient_));
}

SparseVector Subspace::reduce(SparseVector v) const {
  check_ambient(v);
  // Rows vanish at every other pivot, so one ascending pass suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t pivot = it->first;
    add_scaled(v, row->second, -it->second);
    it = v.upper_bound(pivot);
  }
  return v;
}

bool Subspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational lead = v.begin()->second;
  for (auto& [i, c] : v) c /= lead;
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit != row.end()) add_scaled(row, v, -Rational(hit->second));
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

void Subspace::insert_all(const Subspace& other) {
  if (other.ambient_ != ambient_)
    throw Error(ErrorKind::AmbientMismatch, "ambient dimensions " + std::to_string(ambient_) + " and " +
                                                std::to_string(other.ambient_) + " differ");
  for (const auto& [p, row] : other.rows_) insert(row);
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorKind::AmbientMismatch, "ambient dimensions " + std::to_string(ambient_) + " and " +
                                                std::to_string(other.ambient_) + " differ");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains(r.second); });
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& images) {
  struct Row {
    SparseVector image;
    SparseVector combination;
  };
  std::map<std::size_t, Row> rows;
  std::vector<SparseVector> found;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVector v = images[i];
    SparseVector comb{{i, Rational(1)}};
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const std::size_t pivot = it->first;
      const Rational c = it->second;
      add_scaled(v, row->second.image, -c);
      add_scaled(comb, row->second.combination, -c);
      it = v.upper_bound(pivot);
    }
    if (v.empty()) {
      found.push_back(std::move(comb));
      continue;
    }
    const Rational lead = v.begin()->second;
    for (auto& [j, c] : v) c /= lead;
    for (auto& [j, c] : comb) c /= lead;
    const std::size_t pivot = v.begin()->first;
    rows.emplace(pivot, Row{std::move(v), std::move(comb)});
  }
  return Subspace::span(images.size(), found).basis();
}

PowerIdealSpan power_ideal_span(const Algebra& algebra, int k, int weight_bound) {
  PowerIdealSpan out{MonomialIndex(algebra.alphabet(), weight_bound, false), Subspace()};
  out.span = Subspace(out.index.size());
  const Alphabet& alphabet = algebra.alphabet();
  auto recurse = [&](auto&& self, const PBWElement& value, int length, int remaining) -> void {
    if (length >= k) out.span.insert(out.index.coordinates(value));
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      if (alphabet[g].weight > remaining) continue;
      self(self, algebra.multiply_by_generator(value, static_cast<int>(g)), length + 1,
           remaining - alphabet[g].weight);
    }
  };
  recurse(recurse, algebra.one(), 0, weight_bound);
  return out;
}

TruncationAlgebra::TruncationAlgebra(const Algebra& algebra, int k, int weight_bound)
    : alphabet_(algebra.alphabet()), power_(k), ideal_(power_ideal_span(algebra, k, weight_bound)) {
  for (std::size_t i = 0; i < ideal_.index.size(); ++i) {
    if (ideal_.span.is_pivot(i)) continue;
    quotient_position_.emplace(i, basis_.size());
    basis_.push_back(ideal_.index.monomial(i));
  }
  table_.assign(basis_.size(), std::vector<SparseVector>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      // Generator products of total length >= k lie in the ideal.
      if (static_cast<int>(basis_[i].length() + basis_[j].length()) >= k) continue;
      table_[i][j] = reduce(algebra.multiply_monomials(basis_[i], basis_[j]));
    }
}

SparseVector TruncationAlgebra::reduce(const PBWElement& x) const {
  if (x.coefficient(Word()) != 0)
    throw Error(ErrorKind::AmbientMismatch, "element has a constant term; the truncation is nonunital");
  SparseVector rest = ideal_.span.reduce(ideal_.index.coordinates(x));
  SparseVector out;
  for (const auto& [i, c] : rest) out.emplace(quotient_position_.at(i), c);
  return out;
}

SparseVector TruncationAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, table_.at(i).at(j), a * b);
  return out;
}

SparseVector TruncationAlgebra::commutator(const SparseVector& x, const SparseVector& y) const {
  SparseVector out = multiply(x, y);
  add_scaled(out, multiply(y, x), Rational(-1));
  return out;
}

std::vector<SparseVector> TruncationAlgebra::generator_images() const {
  std::vector<SparseVector> out;
  for (std::size_t g = 0; g < alphabet_.size(); ++g) {
    if (alphabet_[g].weight > weight_bound()) continue;
    PBWElement x;
    x.add_term(Word({static_cast<int>(g)}, alphabet_), Rational(1));
    out.push_back(reduce(x));
  }
  return out;
}

std::string TruncationAlgebra::render(const SparseVector& v) const {
  PBWElement x;
  for (const auto& [i, c] : v) x.add_term(basis_.at(i), c);
  return hopfkit::render(x, alphabet_);
}

TruncationAlgebra truncation_algebra(const Algebra& algebra, int k, int weight_bound) {
  if (k < 1) throw Error(ErrorKind::WindowTooSmall, "power k must be positive");
  int max_weight = 0;
  for (const auto& g : algebra.alphabet()) max_weight = std::max(max_weight, g.weight);
  if ((k - 1) * max_weight > weight_bound)
    throw Error(ErrorKind::WindowTooSmall, "monomials of length " + std::to_string(k - 1) + " reach weight " +
                                               std::to_string((k - 1) * max_weight) + " > W=" +
                                               std::to_string(weight_bound));
  require_confluent(algebra);
  return TruncationAlgebra(algebra, k, weight_bound);
}

CenterResult center_dim(const TruncationAlgebra& t, const std::vector<SparseVector>& generator_images) {
  const std::size_t n = t.dim();
  std::vector<SparseVector> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < generator_images.size(); ++g)
      for (const auto& [j, c] : t.commutator(t.basis_vector(i), generator_images[g])) images[i].emplace(g * n + j, c);
  CenterResult out;
  out.basis = kernel(images);
  out.dim = out.basis.size();
  out.verified = std::all_of(out.basis.begin(), out.basis.end(), [&](const SparseVector& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (!t.commutator(v, t.basis_vector(i)).empty()) return false;
    return true;
  });
  return out;
}

namespace {

// Rows of the map x -> (q (x) id) delta(x), q the projection modulo `below`.
SparseVector level_image(const HopfAlgebra& h, const MonomialIndex& index, const Subspace& below, const Word& m) {
  std::map<Word, PBWElement> by_right;
  for (const auto& [key, c] : h.coproduct_monomial(m)) {
    if (key.first.length() == 0 || key.second.length() == 0) continue;
    by_right[key.second].add_term(key.first, c);
  }
  SparseVector out;
  const std::size_t n = index.size();
  for (const auto& [right, left] : by_right) {
    const auto j = index.find(right);
    if (!j) throw Error(ErrorKind::AmbientMismatch, "coproduct term outside the coordinate window");
    for (const auto& [i, c] : below.reduce(index.coordinates(left))) out.emplace(i * n + *j, c);
  }
  return out;
}

}  // namespace

CoradicalLevels coradical_levels(const HopfAlgebra& h, int weight_bound) {
  CoradicalLevels out;
  out.index = MonomialIndex(h.alphabet(), weight_bound, false);
  const std::size_t n = out.index.size();
  out.levels.emplace_back(n);
  if (n == 0) {
    out.stabilized = true;
    return out;
  }
  // A monomial of weight w sits at level <= w, so W levels always suffice.
  for (int level = 1; level <= weight_bound; ++level) {
    std::vector<SparseVector> images;
    for (const Word& m : out.index.monomials()) images.push_back(level_image(h, out.index, out.levels.back(), m));
    out.levels.push_back(Subspace::span(n, kernel(images)));
    if (out.levels.back().dim() == n) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

PrimitiveSpace primitive_space(const HopfAlgebra& h, int weight_bound) {
  PrimitiveSpace out;
  out.index = MonomialIndex(h.alphabet(), weight_bound, false);
  Subspace zero(out.index.size());
  std::vector<SparseVector> images;
  for (const Word& m : out.index.monomials()) images.push_back(level_image(h, out.index, zero, m));
  out.space = Subspace::span(out.index.size(), kernel(images));
  return out;
}

SignatureReport signature(const HopfAlgebra& h, int weight_bound) {
  const CoradicalLevels c = coradical_levels(h, weight_bound);
  const Algebra& algebra = h.algebra();
  const MonomialIndex& index = c.index;
  SignatureReport out;
  for (std::size_t level = 1; level < c.levels.size(); ++level) {
    Subspace decomposable = c.levels[level - 1];
    for (std::size_t i = 1; i < level; ++i)
      for (const SparseVector& x : c.levels[i].basis())
        for (const SparseVector& y : c.levels[level - i].basis()) {
          if (index.weight(x) + index.weight(y) > weight_bound) continue;
          decomposable.insert(index.coordinates(algebra.multiply(index.element(x), index.element(y))));
        }
    const std::size_t fresh = c.levels[level].dim() - decomposable.dim();
    if (fresh == 0) continue;
    out.counts.emplace_back(static_cast<int>(level), fresh);
    out.signature.insert(out.signature.end(), fresh, static_cast<int>(level));
  }
  int degree = weight_bound;
  for (const auto& g : h.alphabet()) degree = std::max(degree, g.weight);
  out.gk = gk_dimension(factor_series(hilbert_series(algebra, degree)));
  out.complete = !out.gk.infinite && out.gk.value == static_cast<long>(out.signature.size());
  return out;
}

int default_weight_bound(const Alphabet& alphabet) {
  int max_weight = 0;
  for (const auto& g : alphabet) max_weight = std::max(max_weight, g.weight);
  return 2 * max_weight + 2;
}

}  // namespace hopfkit
