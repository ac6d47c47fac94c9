#pragma once

#include <string>
#include <vector>

#include "hopfkit/pbw.hpp"

namespace hopfkit {

/// Integer power series truncated after t^degree.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Integer> coefficients);

  static PowerSeries one(int degree);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Integer& operator[](std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  /// Product truncated to the smaller degree.
  PowerSeries operator*(const PowerSeries& other) const;
  /// In-place multiplication by (1 - t^i).
  void multiply_by_one_minus(int i);
  /// In-place multiplication by 1/(1 - t^i).
  void divide_by_one_minus(int i);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Integer> coefficients_;
};

/// The exponents n_1, n_2, ... of 1 / prod (1 - t^i)^{n_i}; index 0 holds n_1.
struct ExponentSequence {
  std::vector<Integer> n;

  Integer at(int i) const { return i >= 1 && i <= static_cast<int>(n.size()) ? n[i - 1] : Integer(0); }
  int window() const { return static_cast<int>(n.size()); }
  /// Exponents up to the last nonzero one.
  std::vector<Integer> trimmed() const;
  friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;
};

/// prod over weights of 1/(1 - t^w), to the given degree.
PowerSeries weight_product_series(const std::vector<int>& weights, int degree);
/// prod (1 - t^i)^{-n_i}, to the given degree.
PowerSeries expand_exponents(const ExponentSequence& n, int degree);

/// Series of the ordered monomials; requires certified confluence. For a
/// weight-graded presentation this is the Hilbert series of the algebra, for
/// a filtered one the series of its associated graded.
PowerSeries hilbert_series(const Algebra& algebra, int degree);

/// Peels off (1 - t^i)^{-n_i} degree by degree. Throws NotHopfAdmissible(i)
/// when some n_i would be negative or the constant term is not 1.
ExponentSequence factor_series(const PowerSeries& h);

struct GkDimension {
  bool infinite = false;  // nonzero exponent at the truncation boundary
  Integer value = 0;
};

GkDimension gk_dimension(const ExponentSequence& n);

struct SupportReport {
  bool interval = false;
  int ell = 1;  // support is [1, ell) when interval
  bool contradiction = false;  // degree-1 generation claimed but support has a gap
};

SupportReport support_interval_check(const ExponentSequence& n, bool generated_in_degree_one = false);

enum class ObstructionVerdict { None, SkewCommutation, PolynomialSeries };

struct ObstructionReport {
  ObstructionVerdict verdict = ObstructionVerdict::None;
  std::string theorem;  // stable key: "skew-commutation", "polynomial-series" or "none"
  std::string reason;
  ExponentSequence exponents;
};

/// "No Hopf structure" tests for a weight-graded presentation: a pair with
/// g_hi g_lo = q g_lo g_hi, q != 1, rules out any Hopf structure; so does a
/// Hilbert series 1/(1-t)^d on a noncommutative algebra.
ObstructionReport hopf_obstruction(const Algebra& algebra, int degree);

/// Keeps only the head-weight part of each relation tail. The result is
/// weight-graded with the same monomial basis; the coproduct is dropped.
Presentation associated_graded(const Presentation& p);

std::string render_series(const PowerSeries& h);
std::string render_product_form(const ExponentSequence& n);
std::string render_exponents(const ExponentSequence& n);

}  // namespace hopfkit
