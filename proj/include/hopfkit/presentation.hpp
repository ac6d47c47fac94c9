#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/freealg.hpp"

namespace hopfkit {

using TensorKey = std::pair<Word, Word>;
using Tensor3Key = std::array<Word, 3>;

/// Element of A (x) A with both components in normal form.
using TensorElement = Combination<TensorKey>;
using Tensor3Element = Combination<Tensor3Key>;

/// Straightening rule g_hi g_lo -> q g_lo g_hi + tail, hi > lo.
struct Relation {
  int hi = 0;
  int lo = 0;
  Rational q = 1;
  PBWElement tail;

  bool is_trivial() const { return q == 1 && tail.is_zero(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Reduced coproducts delta(g) = Delta(g) - g(x)1 - 1(x)g, one per generator.
/// An empty entry declares the generator primitive. The counit is fixed to
/// vanish on every generator.
struct CoproductData {
  std::vector<TensorElement> delta;

  friend bool operator==(const CoproductData&, const CoproductData&) = default;
};

/// A PBW-type algebra: ordered weighted generators, one straightening rule
/// per pair hi > lo (absent pairs commute), and an optional coproduct.
class Presentation {
 public:
  Presentation() : alphabet_(std::make_shared<Alphabet>()) {}
  Presentation(std::string name, Alphabet alphabet);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  std::size_t generator_count() const { return alphabet_->size(); }

  /// Index of the generator with this name, or -1.
  int find_generator(const std::string& name) const;
  int generator_index(const std::string& name) const;  // throws UnknownGenerator
  Word letter(int index) const { return Word({index}, *alphabet_); }
  Word monomial(const std::vector<int>& letters) const { return Word(letters, *alphabet_); }

  /// Installs (or replaces) the rule for the pair hi > lo.
  void set_relation(Relation relation);
  bool has_relation(int hi, int lo) const;
  /// The rule for hi > lo; the commuting default when none was set.
  Relation relation(int hi, int lo) const;
  /// Explicitly stored rules, ordered by (hi, lo).
  std::vector<Relation> relations() const;
  /// Stored rules that are not plain commutation.
  std::vector<Relation> nontrivial_relations() const;

  const std::optional<CoproductData>& coproduct() const { return coproduct_; }
  void set_coproduct(CoproductData data) { coproduct_ = std::move(data); }
  void clear_coproduct() { coproduct_.reset(); }

  /// Rebuilds the alphabet with new weights; relation and coproduct terms
  /// are re-keyed so cached word weights stay consistent.
  Presentation with_weights(const std::vector<int>& weights) const;

  /// Converts a stored element to this presentation's alphabet (recomputing weights).
  PBWElement rekey(const PBWElement& x) const;

  friend bool operator==(const Presentation& x, const Presentation& y);

 private:
  std::string name_;
  std::shared_ptr<const Alphabet> alphabet_;
  std::map<std::pair<int, int>, Relation> relations_;
  std::optional<CoproductData> coproduct_;
};

/// The defining relation g_lo g_hi * q - g_hi g_lo + tail as a free element.
/// For q = 1 this is [g_lo, g_hi] - (-tail), matching the usual bracket form.
FreeElement relation_element(const Presentation& p, const Relation& r);
/// Display name such as `[a,b]-c` or `[a,c]`.
std::string relation_name(const Presentation& p, const Relation& r);

std::string render(const TensorElement& x, const Alphabet& alphabet);
std::string render(const Tensor3Element& x, const Alphabet& alphabet);

}  // namespace hopfkit
