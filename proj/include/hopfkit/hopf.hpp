#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hopfkit/pbw.hpp"

namespace hopfkit {

/// An Algebra with an attached connected-shape coproduct.
///
/// Construction rejects presentations without coproduct data, any relation
/// with q != 1, and generator coproducts whose extra terms have a constant
/// factor or a factor of weight >= the generator's weight. The counit is zero
/// on every generator.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(Presentation p);
  explicit HopfAlgebra(const Algebra& algebra);
  HopfAlgebra(const HopfAlgebra& other);
  HopfAlgebra& operator=(const HopfAlgebra&) = delete;

  const Algebra& algebra() const { return algebra_; }
  const Presentation& presentation() const { return algebra_.presentation(); }
  const Alphabet& alphabet() const { return algebra_.alphabet(); }

  /// delta(g) as declared.
  const TensorElement& generator_delta(int g) const { return deltas_.at(g); }

  TensorElement coproduct(const PBWElement& x) const;
  const TensorElement& coproduct_monomial(const Word& m) const;
  TensorElement reduced_coproduct(const PBWElement& x) const;

  /// Componentwise product in A (x) A with each component normal-formed.
  TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) const;

  Rational counit(const PBWElement& x) const { return x.coefficient(Word()); }

 private:
  void validate_shape() const;

  Algebra algebra_;
  std::vector<TensorElement> deltas_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Word, TensorElement> coproduct_cache_;
};

TensorElement tensor(const PBWElement& x, const PBWElement& y);
Tensor3Element tensor3(const PBWElement& x, const PBWElement& y, const PBWElement& z);

TensorElement coproduct(const HopfAlgebra& h, const PBWElement& x);
TensorElement reduced_coproduct(const HopfAlgebra& h, const PBWElement& x);

struct RelationCheck {
  std::string relation;  // e.g. "[z,w]-d"
  bool passed = false;
  TensorElement residual;
};

struct RelationCompatibilityReport {
  std::vector<RelationCheck> checks;  // one per generator pair, ordered by (hi, lo)
  bool passed() const;
};

/// Expands Delta' of each defining relation in F (x) F and applies nf (x) nf;
/// a relation passes when the result vanishes.
RelationCompatibilityReport check_relation_compatibility(const HopfAlgebra& h);

struct CoassociativityCheck {
  std::string generator;
  Tensor3Element left;   // (delta (x) id) delta(g)
  Tensor3Element right;  // (id (x) delta) delta(g)
  bool passed() const { return left == right; }
};

struct CoassociativityReport {
  std::vector<CoassociativityCheck> generators;
  std::size_t monomials_checked = 0;
  std::vector<std::string> monomial_failures;
  bool passed() const;
};

/// Generator-level check through delta, plus (Delta (x) id) Delta =
/// (id (x) Delta) Delta on every basis monomial of weight <= sample_weight.
CoassociativityReport check_coassociativity(const HopfAlgebra& h, int sample_weight = 4);

struct CounitReport {
  std::vector<std::string> failures;
  std::size_t relations_checked = 0;
  std::size_t generators_checked = 0;
  bool passed() const { return failures.empty(); }
};

CounitReport check_counit(const HopfAlgebra& h);

struct AntipodeTable {
  std::vector<PBWElement> images;  // S(g) per generator
};

struct AntipodeReport {
  int weight_bound = 0;
  std::size_t monomials_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// S extended anti-multiplicatively and linearly.
PBWElement apply_antipode(const HopfAlgebra& h, const AntipodeTable& table, const PBWElement& x);

/// The recursion below without the verification pass.
AntipodeTable antipode_candidate(const HopfAlgebra& h);

/// Solves S(g) = -g - sum S(u) v over delta(g) = sum u (x) v, generators taken
/// in weight order, then verifies both antipode axioms on every basis monomial
/// of weight <= verify_weight. Throws AxiomFailure on a violation.
AntipodeTable solve_antipode(const HopfAlgebra& h, int verify_weight = 6);

/// m(S (x) id) Delta(x) = eps(x) 1 = m(id (x) S) Delta(x) on basis monomials.
AntipodeReport verify_antipode(const HopfAlgebra& h, const AntipodeTable& table, int weight_bound);

/// S(S(x)) = x on basis monomials of weight <= weight_bound.
AntipodeReport check_involutive_antipode(const HopfAlgebra& h, const AntipodeTable& table, int weight_bound);

/// True iff the reduced coproduct vanishes; x must have zero constant term.
bool is_primitive(const HopfAlgebra& h, const PBWElement& x);

}  // namespace hopfkit
