#include "hopfkit/grading.hpp"

#include <algorithm>

namespace hopfkit {

PowerSeries::PowerSeries(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {}

PowerSeries PowerSeries::one(int degree) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max(degree, 0)) + 1, Integer(0));
  c[0] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  const int d = std::min(degree(), other.degree());
  std::vector<Integer> out(d + 1, Integer(0));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) out[i + j] += coefficients_[i] * other.coefficients_[j];
  return PowerSeries(std::move(out));
}

void PowerSeries::multiply_by_one_minus(int i) {
  for (int k = degree(); k >= i; --k) coefficients_[k] -= coefficients_[k - i];
}

void PowerSeries::divide_by_one_minus(int i) {
  for (int k = i; k <= degree(); ++k) coefficients_[k] += coefficients_[k - i];
}

std::vector<Integer> ExponentSequence::trimmed() const {
  std::vector<Integer> out = n;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

PowerSeries weight_product_series(const std::vector<int>& weights, int degree) {
  PowerSeries h = PowerSeries::one(degree);
  for (int w : weights) h.divide_by_one_minus(w);
  return h;
}

PowerSeries expand_exponents(const ExponentSequence& n, int degree) {
  PowerSeries h = PowerSeries::one(degree);
  for (int i = 1; i <= std::min(degree, n.window()); ++i)
    for (Integer k = 0; k < n.at(i); ++k) h.divide_by_one_minus(i);
  return h;
}

PowerSeries hilbert_series(const Algebra& algebra, int degree) {
  require_confluent(algebra);
  std::vector<int> weights;
  for (const auto& g : algebra.alphabet()) weights.push_back(g.weight);
  return weight_product_series(weights, degree);
}

ExponentSequence factor_series(const PowerSeries& h) {
  if (h.degree() < 0 || h[0] != 1) throw Error(ErrorKind::NotHopfAdmissible, "constant term is not 1 (index 0)");
  PowerSeries work = h;
  ExponentSequence out;
  for (int i = 1; i <= h.degree(); ++i) {
    Integer n_i = work[i];
    if (n_i < 0)
      throw Error(ErrorKind::NotHopfAdmissible,
                  "exponent n_" + std::to_string(i) + " = " + n_i.get_str() + " would be negative (index " +
                      std::to_string(i) + ")");
    for (Integer k = 0; k < n_i; ++k) work.multiply_by_one_minus(i);
    out.n.push_back(n_i);
  }
  return out;
}

GkDimension gk_dimension(const ExponentSequence& n) {
  GkDimension out;
  if (!n.n.empty() && n.n.back() != 0) {
    out.infinite = true;
    return out;
  }
  for (const auto& v : n.n) out.value += v;
  return out;
}

SupportReport support_interval_check(const ExponentSequence& n, bool generated_in_degree_one) {
  SupportReport out;
  std::vector<Integer> t = n.trimmed();
  out.ell = static_cast<int>(t.size()) + 1;
  out.interval = std::none_of(t.begin(), t.end(), [](const Integer& v) { return v == 0; });
  out.contradiction = generated_in_degree_one && !out.interval;
  return out;
}

ObstructionReport hopf_obstruction(const Algebra& algebra, int degree) {
  ObstructionReport report;
  report.theorem = "none";
  const Presentation& p = algebra.presentation();
  if (!algebra.graded()) {
    report.reason = "no obstruction found: presentation is only weight-filtered, the tests need a grading";
    return report;
  }
  for (const Relation& r : p.nontrivial_relations()) {
    if (r.q != 1 && r.tail.is_zero()) {
      const auto& a = p.alphabet();
      report.verdict = ObstructionVerdict::SkewCommutation;
      report.theorem = "skew-commutation";
      report.reason = "no Hopf structure: " + a[r.hi].name + a[r.lo].name + " = " + r.q.get_str() + " " +
                      a[r.lo].name + a[r.hi].name +
                      " with q != 1; a connected graded algebra with a skew-commuting pair of nonzero elements "
                      "admits no Hopf structure";
      return report;
    }
  }
  // Confluence certifies the PBW basis the series formula presumes.
  report.exponents = factor_series(hilbert_series(algebra, degree));
  const std::vector<Integer> n = report.exponents.trimmed();
  const bool noncommutative = !p.nontrivial_relations().empty();
  if (noncommutative && n.size() == 1) {
    report.verdict = ObstructionVerdict::PolynomialSeries;
    report.theorem = "polynomial-series";
    report.reason = "no Hopf structure: Hilbert series is " + render_product_form(report.exponents) +
                    " but the algebra is noncommutative; a connected graded Hopf algebra with series "
                    "1/(1-t)^d is a commutative polynomial ring";
    return report;
  }
  report.reason = "no obstruction found";
  return report;
}

Presentation associated_graded(const Presentation& p) {
  Presentation out("gr(" + p.name() + ")", p.alphabet());
  for (const Relation& r : p.relations()) {
    const int head_weight = p.monomial({r.hi, r.lo}).weight();
    Relation top{r.hi, r.lo, r.q, {}};
    for (const auto& [m, c] : r.tail) {
      const int w = p.monomial(m.letters()).weight();
      if (w > head_weight)
        throw Error(ErrorKind::TailAboveHead, "relation " + relation_name(p, r) + ": tail monomial " +
                                                  render_word(m, p.alphabet()) + " outweighs its head");
      if (w == head_weight) top.tail.add_term(out.monomial(m.letters()), c);
    }
    out.set_relation(std::move(top));
  }
  validate_presentation(out);
  return out;
}

namespace {

std::string power_term(const std::string& base, const Integer& e) {
  return e == 1 ? base : base + "^" + e.get_str();
}

}  // namespace

std::string render_series(const PowerSeries& h) {
  std::string out;
  for (int i = 0; i <= h.degree(); ++i) {
    const Integer& c = h[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    std::string coef = (c == 1 || c == -1) && i > 0 ? "" : Integer(abs(c)).get_str();
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    out += coef + mono;
  }
  if (out.empty()) out = "0";
  return out + " + ...";
}

std::string render_product_form(const ExponentSequence& n) {
  std::vector<std::string> factors;
  const std::vector<Integer> t = n.trimmed();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    std::string base = i == 0 ? "(1-t)" : "(1-t^" + std::to_string(i + 1) + ")";
    factors.push_back(power_term(base, t[i]));
  }
  if (factors.empty()) return "1";
  if (factors.size() == 1) return "1/" + factors.front();
  std::string joined;
  for (const auto& f : factors) joined += (joined.empty() ? "" : " ") + f;
  return "1/(" + joined + ")";
}

std::string render_exponents(const ExponentSequence& n) {
  std::vector<Integer> t = n.trimmed();
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].get_str();
  return out + ")";
}

}  // namespace hopfkit
