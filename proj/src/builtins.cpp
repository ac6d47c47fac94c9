#include "hopfkit/builtins.hpp"

#include <cctype>

namespace hopfkit {

namespace {

Alphabet make_alphabet(const std::vector<std::pair<std::string, int>>& gens) {
  Alphabet alphabet;
  for (const auto& [name, weight] : gens) alphabet.push_back({name, weight});
  return alphabet;
}

PBWElement monomial_element(const Presentation& p, std::vector<int> letters, const Rational& c) {
  return PBWElement(p.monomial(letters), c);
}

TensorElement tensor_term(const Presentation& p, std::vector<int> left, std::vector<int> right, const Rational& c) {
  return TensorElement({p.monomial(left), p.monomial(right)}, c);
}

// Straightening for [lo, hi] = value, i.e. hi lo -> lo hi - value.
void bracket(Presentation& p, int lo, int hi, const PBWElement& value) {
  p.set_relation(Relation{hi, lo, Rational(1), -value});
}

CoproductData all_primitive(const Presentation& p) {
  return CoproductData{std::vector<TensorElement>(p.generator_count())};
}

// a b c z w d with [a,b] = c, [z,w] = d.
Presentation two_heisenbergs(const std::string& name) {
  Presentation p(name, make_alphabet({{"a", 1}, {"b", 1}, {"c", 1}, {"z", 2}, {"w", 2}, {"d", 3}}));
  bracket(p, 0, 1, monomial_element(p, {2}, 1));
  bracket(p, 3, 4, monomial_element(p, {5}, 1));
  return p;
}

enum { A = 0, B = 1, C = 2, Z = 3, W = 4, D = 5 };

// Delta(z) = 1(x)z + a(x)c - c(x)a + z(x)1 and Delta(w) likewise with b.
void attach_zw_coproduct(const Presentation& p, CoproductData& data) {
  data.delta[Z] = tensor_term(p, {A}, {C}, 1) + tensor_term(p, {C}, {A}, -1);
  data.delta[W] = tensor_term(p, {B}, {C}, 1) + tensor_term(p, {C}, {B}, -1);
}

Presentation make_j() {
  Presentation p = two_heisenbergs("J");
  CoproductData data = all_primitive(p);
  attach_zw_coproduct(p, data);
  data.delta[D] = tensor_term(p, {C}, {C, C}, 1) + tensor_term(p, {C, C}, {C}, 1);
  p.set_coproduct(std::move(data));
  return p;
}

Presentation make_l() {
  Presentation p("L", make_alphabet({{"a", 1}, {"b", 1}, {"c", 2}, {"z", 3}, {"w", 3}}));
  bracket(p, A, B, monomial_element(p, {C}, 1));
  bracket(p, Z, W, monomial_element(p, {C, C, C}, make_rational(1, 3)));
  CoproductData data = all_primitive(p);
  attach_zw_coproduct(p, data);
  p.set_coproduct(std::move(data));
  return p;
}

Presentation make_un5() {
  Presentation p("U_n5", make_alphabet({{"x", 1}, {"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}}));
  bracket(p, 1, 2, monomial_element(p, {0}, 1));
  bracket(p, 3, 4, monomial_element(p, {0}, 1));
  p.set_coproduct(all_primitive(p));
  return p;
}

Presentation make_heis3() {
  Presentation p("heis3", make_alphabet({{"a", 1}, {"b", 1}, {"c", 2}}));
  bracket(p, A, B, monomial_element(p, {C}, 1));
  p.set_coproduct(all_primitive(p));
  return p;
}

Presentation make_poly(int d) {
  Alphabet alphabet;
  for (int i = 1; i <= d; ++i) alphabet.push_back({"x" + std::to_string(i), 1});
  Presentation p("poly(" + std::to_string(d) + ")", std::move(alphabet));
  p.set_coproduct(all_primitive(p));
  return p;
}

Presentation make_qplane(const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorKind::ZeroQ, "qplane(0)");
  Presentation p("qplane(" + q.get_str() + ")", make_alphabet({{"x", 1}, {"y", 1}}));
  p.set_relation(Relation{1, 0, q, {}});
  return p;
}

// y x -> x y + x^2
Presentation make_jordan() {
  Presentation p("jordan", make_alphabet({{"x", 1}, {"y", 1}}));
  p.set_relation(Relation{1, 0, Rational(1), monomial_element(p, {0, 0}, 1)});
  return p;
}

bool parse_call(const std::string& name, const std::string& head, std::string& argument) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size() + 1, head + "(") != 0 || name.back() != ')')
    return false;
  argument = name.substr(head.size() + 1, name.size() - head.size() - 2);
  return true;
}

}  // namespace

Presentation builtin(const std::string& name) {
  if (name == "H6") {
    Presentation p = two_heisenbergs("H6");
    p.set_coproduct(all_primitive(p));
    return p;
  }
  if (name == "J") return make_j();
  if (name == "L") return make_l();
  if (name == "U_n5") return make_un5();
  if (name == "heis3") return make_heis3();
  if (name == "jordan") return make_jordan();
  std::string arg;
  if (parse_call(name, "poly", arg)) {
    bool digits = !arg.empty() && arg.size() < 4;
    for (char ch : arg) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
    if (!digits || std::stoi(arg) < 1) throw Error(ErrorKind::UnknownBuiltin, name);
    return make_poly(std::stoi(arg));
  }
  if (parse_call(name, "qplane", arg)) {
    Rational q;
    try {
      q = parse_rational(arg);
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownBuiltin, name);
    }
    return make_qplane(q);
  }
  throw Error(ErrorKind::UnknownBuiltin, "'" + name + "'");
}

std::vector<std::string> builtin_examples() {
  return {"H6", "J", "L", "U_n5", "heis3", "jordan", "poly(1)", "poly(3)", "qplane(2)", "qplane(-1/2)"};
}

Presentation corrupt_drop_dd_correction(const Presentation& j) {
  Presentation out = j;
  int d = out.generator_index("d");
  CoproductData data = *out.coproduct();
  data.delta.at(d) = TensorElement();
  out.set_coproduct(std::move(data));
  out.set_name(j.name() + "[drop-dd-correction]");
  return out;
}

}  // namespace hopfkit
