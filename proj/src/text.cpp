#include "hopfkit/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "hopfkit/pbw.hpp"

namespace hopfkit {

namespace {

bool is_name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

class ExpressionParser {
 public:
  ExpressionParser(const Presentation& p, std::string_view text) : p_(p), text_(text) {}

  // Terms with a single word each.
  Combination<Word> parse_linear() {
    Combination<Word> out;
    parse_terms([&](const Rational& c) { out.add_term(parse_monomial(), c); });
    return out;
  }

  TensorElement parse_tensor() {
    TensorElement out;
    parse_terms([&](const Rational& c) {
      Word left = parse_monomial();
      skip_space();
      if (text_.substr(pos_, 3) != "(x)") fail("expected '(x)'");
      pos_ += 3;
      Word right = parse_monomial();
      out.add_term({left, right}, c);
    });
    return out;
  }

 private:
  template <class TermFn>
  void parse_terms(TermFn&& term) {
    skip_space();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_space();
      Rational sign(1);
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_space();
      const std::size_t start = pos_;
      Rational coefficient = sign * parse_coefficient();
      term(coefficient);
      if (pos_ == start) fail("expected a term");
      first = false;
      skip_space();
      if (at_end()) break;
    }
  }

  // Leading number; absent means 1. A bare number followed by a name is a
  // coefficient, a bare number alone is that scalar times the unit.
  Rational parse_coefficient() {
    if (at_end() || !is_digit(peek())) return Rational(1);
    std::string digits = read_digits();
    std::string text = digits;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || !is_digit(peek())) fail("expected denominator");
      text += "/" + read_digits();
    }
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      star_after_coefficient_ = true;
    }
    return parse_rational(text);
  }

  Word parse_monomial() {
    std::vector<int> letters;
    bool pending_star = std::exchange(star_after_coefficient_, false);
    bool factor = pending_star;
    while (true) {
      skip_space();
      if (at_end()) break;
      char ch = peek();
      if (ch == '*') {
        if (!factor || pending_star) fail("unexpected '*'");
        pending_star = true;
        ++pos_;
        continue;
      }
      if (ch == '1' && (pos_ + 1 >= text_.size() || !is_digit(text_[pos_ + 1]))) {
        ++pos_;  // explicit unit factor
        factor = true;
        pending_star = false;
        continue;
      }
      if (!is_name_start(ch)) break;
      factor = true;
      pending_star = false;
      int g = match_generator();
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !is_digit(peek())) fail("expected exponent");
        power = std::stoi(read_digits());
      }
      letters.insert(letters.end(), power, g);
    }
    if (pending_star) fail("expected a factor after '*'");
    return Word(std::move(letters), p_.alphabet());
  }

  int match_generator() {
    std::size_t best_len = 0;
    int best = -1;
    const Alphabet& alphabet = p_.alphabet();
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      const std::string& name = alphabet[g].name;
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best_len = name.size();
        best = static_cast<int>(g);
      }
    }
    if (best < 0) {
      std::size_t end = pos_;
      while (end < text_.size() && is_name_char(text_[end])) ++end;
      throw Error(ErrorKind::UnknownGenerator, "'" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best_len;
    return best;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::SyntaxError, message + " at column " + std::to_string(pos_ + 1) + " in '" +
                                            std::string(text_) + "'");
  }

  const Presentation& p_;
  std::string_view text_;
  std::size_t pos_ = 0;
  bool star_after_coefficient_ = false;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail_line(ErrorKind kind, std::size_t line, const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

// Re-throws an error from a nested parse with the line number attached.
template <class Fn>
auto at_line(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    fail_line(e.kind(), line, e.detail());
  }
}

Alphabet parse_generators(const std::string& body, std::size_t line) {
  Alphabet alphabet;
  std::istringstream in(body);
  std::string item;
  while (in >> item) {
    Generator g;
    auto colon = item.find(':');
    g.name = item.substr(0, colon);
    if (g.name.empty() || !is_name_start(g.name[0]))
      fail_line(ErrorKind::SyntaxError, line, "bad generator name '" + g.name + "'");
    for (char ch : g.name)
      if (!is_name_char(ch)) fail_line(ErrorKind::SyntaxError, line, "bad generator name '" + g.name + "'");
    if (colon != std::string::npos) {
      std::string weight = item.substr(colon + 1);
      if (weight.empty() || weight.size() > 6 || !std::all_of(weight.begin(), weight.end(), is_digit))
        fail_line(ErrorKind::SyntaxError, line, "bad weight in '" + item + "'");
      g.weight = std::stoi(weight);
    }
    alphabet.push_back(std::move(g));
  }
  if (alphabet.empty()) fail_line(ErrorKind::SyntaxError, line, "no generators listed");
  return alphabet;
}

}  // namespace

FreeElement parse_free_expression(const Presentation& p, std::string_view text) {
  return FreeElement(p.alphabet_ptr(), ExpressionParser(p, text).parse_linear());
}

PBWElement parse_pbw_expression(const Presentation& p, std::string_view text) {
  PBWElement x = ExpressionParser(p, text).parse_linear();
  for (const auto& [m, c] : x)
    if (!m.is_ordered())
      throw Error(ErrorKind::TailNotNormal, "monomial " + render_word(m, p.alphabet()) + " is not ordered");
  return x;
}

TensorElement parse_tensor_expression(const Presentation& p, std::string_view text) {
  return ExpressionParser(p, text).parse_tensor();
}

Presentation parse_presentation(std::string_view text) {
  std::string name = "file";
  std::optional<Presentation> p;
  bool want_coproduct = false;
  std::set<std::pair<int, int>> seen_relations;
  std::vector<std::pair<std::size_t, std::string>> rel_lines, delta_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string content = trim(raw);
    if (content.empty()) continue;
    auto colon = content.find(':');
    if (colon == std::string::npos) fail_line(ErrorKind::SyntaxError, line, "expected '<section>: ...'");
    std::string key = trim(std::string_view(content).substr(0, colon));
    std::string body = trim(std::string_view(content).substr(colon + 1));
    if (key == "name") {
      name = body;
    } else if (key == "generators") {
      if (p) fail_line(ErrorKind::SyntaxError, line, "generators listed twice");
      p.emplace(name, parse_generators(body, line));
    } else if (key == "rel") {
      rel_lines.emplace_back(line, body);
    } else if (key == "delta") {
      delta_lines.emplace_back(line, body);
    } else if (key == "coproduct") {
      if (body != "connected") fail_line(ErrorKind::SyntaxError, line, "only 'coproduct: connected' is supported");
      want_coproduct = true;
    } else {
      fail_line(ErrorKind::SyntaxError, line, "unknown section '" + key + "'");
    }
  }
  if (!p) throw Error(ErrorKind::SyntaxError, "missing 'generators:' line");
  p->set_name(name);

  for (const auto& [ln, body] : rel_lines) {
    auto eq = body.find('=');
    if (eq == std::string::npos) fail_line(ErrorKind::SyntaxError, ln, "expected '<hi> <lo> = ...'");
    Combination<Word> head = at_line(ln, [&] { return ExpressionParser(*p, body.substr(0, eq)).parse_linear(); });
    if (head.size() != 1 || head.begin()->second != 1 || head.begin()->first.length() != 2)
      fail_line(ErrorKind::SyntaxError, ln, "left side must be two generators");
    const Word& hw = head.begin()->first;
    const int hi = hw[0], lo = hw[1];
    if (hi <= lo) fail_line(ErrorKind::SyntaxError, ln, "left side must list the later generator first");
    if (!seen_relations.insert({hi, lo}).second)
      fail_line(ErrorKind::DuplicateRelation, ln, "pair " + render_word(hw, p->alphabet()) + " already has a relation");
    Combination<Word> rhs = at_line(ln, [&] { return ExpressionParser(*p, body.substr(eq + 1)).parse_linear(); });
    Word swapped = p->monomial({lo, hi});
    Relation r{hi, lo, rhs.coefficient(swapped), {}};
    rhs.add_term(swapped, -r.q);
    r.tail = std::move(rhs);
    p->set_relation(std::move(r));
  }

  std::vector<TensorElement> deltas(p->generator_count());
  std::set<int> seen_deltas;
  for (const auto& [ln, body] : delta_lines) {
    want_coproduct = true;
    auto eq = body.find('=');
    if (eq == std::string::npos) fail_line(ErrorKind::SyntaxError, ln, "expected '<gen> = ...'");
    std::string gname = trim(std::string_view(body).substr(0, eq));
    int g = p->find_generator(gname);
    if (g < 0) fail_line(ErrorKind::UnknownGenerator, ln, "'" + gname + "'");
    if (!seen_deltas.insert(g).second)
      fail_line(ErrorKind::DuplicateRelation, ln, "second delta line for '" + gname + "'");
    TensorElement t = at_line(ln, [&] { return parse_tensor_expression(*p, body.substr(eq + 1)); });
    TensorKey left{p->letter(g), Word()}, right{Word(), p->letter(g)};
    if (t.coefficient(left) != 1 || t.coefficient(right) != 1)
      fail_line(ErrorKind::SyntaxError, ln, "coproduct must contain 1(x)" + gname + " + " + gname + "(x)1");
    t.add_term(left, -1);
    t.add_term(right, -1);
    deltas[g] = std::move(t);
  }
  if (want_coproduct) p->set_coproduct(CoproductData{std::move(deltas)});

  validate_presentation(*p);
  return std::move(*p);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

namespace {

std::string spaced_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (int letter : w.letters()) {
    if (!out.empty()) out += " ";
    out += alphabet[letter].name;
  }
  return out;
}

std::string compact_tensor(const TensorElement& t, const Alphabet& alphabet) {
  std::string text = render(t, alphabet);
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 5, " (x) ") == 0) {
      out += "(x)";
      i += 4;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

std::string print_presentation(const Presentation& p) {
  const Alphabet& alphabet = p.alphabet();
  std::ostringstream out;
  out << "name: " << p.name() << "\n";
  out << "generators:";
  for (const auto& g : alphabet) out << " " << g.name << ":" << g.weight;
  out << "\n";
  for (const Relation& r : p.nontrivial_relations()) {
    out << "rel: " << alphabet[r.hi].name << " " << alphabet[r.lo].name << " = ";
    std::string head = spaced_word(p.monomial({r.lo, r.hi}), alphabet);
    out << render_terms({{r.q, head}});
    if (!r.tail.is_zero()) {
      std::string tail = render(r.tail, alphabet);
      if (tail.front() == '-')
        out << " - " << tail.substr(1);
      else
        out << " + " << tail;
    }
    out << "\n";
  }
  if (p.coproduct()) {
    out << "coproduct: connected\n";
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      const TensorElement& delta = p.coproduct()->delta[g];
      if (delta.is_zero()) continue;
      const std::string& n = alphabet[g].name;
      std::string rest = compact_tensor(delta, alphabet);
      out << "delta: " << n << " = 1(x)" << n << " + " << n << "(x)1"
          << (rest.front() == '-' ? " - " + rest.substr(1) : " + " + rest) << "\n";
    }
  }
  return out.str();
}

}  // namespace hopfkit
