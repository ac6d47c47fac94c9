#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/grading.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Coordinate vector: position -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

void add_scaled(SparseVector& target, const SparseVector& x, const Rational& c);

/// Ordered monomials of weight <= W in canonical order, optionally without
/// the unit, numbered 0..N-1.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  MonomialIndex(const Alphabet& alphabet, int weight_bound, bool include_unit);

  int weight_bound() const { return weight_bound_; }
  std::size_t size() const { return monomials_.size(); }
  const Word& monomial(std::size_t i) const { return monomials_.at(i); }
  const std::vector<Word>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Word& m) const;

  /// Throws AmbientMismatch for terms outside the window.
  SparseVector coordinates(const PBWElement& x) const;
  PBWElement element(const SparseVector& v) const;
  /// Largest weight among the terms of v (0 for the zero vector).
  int weight(const SparseVector& v) const;

 private:
  int weight_bound_ = 0;
  std::vector<Word> monomials_;
  std::map<Word, std::size_t> positions_;
};

/// Span kept in reduced row echelon form; each row is normalized at its
/// pivot, the smallest index it touches.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Returns false when v was already in the span.
  bool insert(SparseVector v);
  void insert_all(const Subspace& other);
  /// Remainder of v after eliminating every pivot; zero iff v is a member.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  std::vector<SparseVector> basis() const;
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t i) const { return rows_.count(i) != 0; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  void check_ambient(const SparseVector& v) const;

  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;  // pivot -> row
};

/// Basis of the kernel of the linear map sending e_i to images[i], echelonized.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& images);

struct PowerIdealSpan {
  MonomialIndex index;  // nonempty monomials of weight <= W
  Subspace span;
};

/// Span of nf(w) over words w of length >= k and weight <= W.
PowerIdealSpan power_ideal_span(const Algebra& algebra, int k, int weight_bound);

/// A^+ / (A^+)^k, with the quotient basis given by the monomials that are not
/// pivots of the power ideal span.
class TruncationAlgebra {
 public:
  TruncationAlgebra(const Algebra& algebra, int k, int weight_bound);

  int power() const { return power_; }
  int weight_bound() const { return ideal_.index.weight_bound(); }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Word>& basis() const { return basis_; }

  /// Coordinates of the image of x; x must have zero constant term.
  SparseVector reduce(const PBWElement& x) const;
  SparseVector basis_vector(std::size_t i) const { return {{i, Rational(1)}}; }
  /// Structure constants: product of basis elements i and j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  SparseVector commutator(const SparseVector& x, const SparseVector& y) const;
  std::vector<SparseVector> generator_images() const;

  std::string render(const SparseVector& v) const;

 private:
  Alphabet alphabet_;
  int power_;
  PowerIdealSpan ideal_;
  std::vector<Word> basis_;
  std::map<std::size_t, std::size_t> quotient_position_;  // ambient index -> basis position
  std::vector<std::vector<SparseVector>> table_;
};

/// Throws WindowTooSmall unless every monomial of length < k has weight <= W.
TruncationAlgebra truncation_algebra(const Algebra& algebra, int k, int weight_bound);

struct CenterResult {
  std::size_t dim = 0;
  std::vector<SparseVector> basis;
  /// Every basis vector commutes with every basis element, not only the generators.
  bool verified = false;
};

CenterResult center_dim(const TruncationAlgebra& t, const std::vector<SparseVector>& generator_images);

struct CoradicalLevels {
  MonomialIndex index;          // nonempty monomials of weight <= W
  std::vector<Subspace> levels; // levels[n] = augmentation part of the n-th level; levels[0] = 0
  bool stabilized = false;      // the last level is the whole window
  /// Dimension including the scalars.
  std::size_t dim(std::size_t n) const { return levels.at(n).dim() + 1; }
};

/// S_n = {x : delta(x) in S_{n-1} (x) A^+}, S_0 = scalars, which for a
/// connected coalgebra is the coradical filtration. Computed up to the first
/// level that fills the window.
CoradicalLevels coradical_levels(const HopfAlgebra& h, int weight_bound);

struct PrimitiveSpace {
  MonomialIndex index;
  Subspace space;
};

PrimitiveSpace primitive_space(const HopfAlgebra& h, int weight_bound);

struct SignatureReport {
  std::vector<int> signature;  // ascending
  std::vector<std::pair<int, std::size_t>> counts;  // (level, new generators)
  GkDimension gk;
  bool complete = false;  // signature length equals the GK dimension
};

/// Counts, per level n, dim S_n - dim(S_{n-1} + sum S_i S_{n-i}).
SignatureReport signature(const HopfAlgebra& h, int weight_bound);

int default_weight_bound(const Alphabet& alphabet);

}  // namespace hopfkit
