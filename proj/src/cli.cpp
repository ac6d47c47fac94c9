#include "hopfkit/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "hopfkit/builtins.hpp"
#include "hopfkit/grading.hpp"
#include "hopfkit/properties.hpp"
#include "hopfkit/subspace.hpp"
#include "hopfkit/text.hpp"

namespace hopfkit::cli {
namespace {

struct Options {
  std::vector<std::string> builtins;
  std::vector<std::string> files;
  std::optional<int> weight_bound;
  int degree = 10;
  int power = 3;
  std::optional<std::uint64_t> seed;
  std::string corrupt;
  std::string expr;
  std::string weights;
  std::string name;  // dump-builtin
};

class Report {
 public:
  Report(std::string command, std::string subject) : command_(std::move(command)), subject_(std::move(subject)) {}

  void line(const std::string& text) { lines_.push_back(text); }
  void row(const std::string& label, const std::string& value) {
    std::ostringstream s;
    s << "  " << std::left << std::setw(24) << label << (label.size() >= 24 ? "  " : "") << value;
    lines_.push_back(s.str());
  }
  void key(const std::string& k, const std::string& v) { keys_.emplace_back(k, v); }
  void key(const std::string& k, bool v) { keys_.emplace_back(k, v ? "pass" : "fail"); }
  void key(const std::string& k, std::size_t v) { keys_.emplace_back(k, std::to_string(v)); }

  void print(std::ostream& out) const {
    out << command_ << ": " << subject_ << "\n";
    for (const auto& l : lines_) out << l << "\n";
    out << "\n";
    for (const auto& [k, v] : keys_) out << k << "=" << v << "\n";
  }

 private:
  std::string command_;
  std::string subject_;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> keys_;
};

const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

std::vector<Presentation> load_sources(const Options& o) {
  std::vector<Presentation> out;
  for (const auto& name : o.builtins) out.push_back(builtin(name));
  for (const auto& path : o.files) out.push_back(load_presentation_file(path));
  if (!o.corrupt.empty()) {
    if (o.corrupt != "drop-dd-correction")
      throw Error(ErrorKind::SyntaxError, "unknown corruption '" + o.corrupt + "'");
    for (auto& p : out) p = corrupt_drop_dd_correction(p);
  }
  return out;
}

Presentation load_one(const Options& o) {
  std::vector<Presentation> all = load_sources(o);
  if (all.size() != 1)
    throw CLI::ValidationError("source", "expected exactly one --builtin or --file, got " + std::to_string(all.size()));
  return std::move(all.front());
}

int weight_bound_for(const Options& o, const Alphabet& a) { return o.weight_bound.value_or(default_weight_bound(a)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string render_subspace(const MonomialIndex& index, const Subspace& s, const Alphabet& alpha) {
  std::vector<std::string> parts;
  for (const auto& v : s.basis()) parts.push_back(render(index.element(v), alpha));
  return join(parts, "; ");
}

std::string graded_label(const Algebra& a) { return a.graded() ? "weight-graded" : "weight-filtered"; }

int cmd_check(const Options& o, std::ostream& out) {
  Algebra algebra(load_one(o));
  const Presentation& p = algebra.presentation();
  Report r("check", p.name());
  r.line(std::to_string(p.generator_count()) + " generators, " + graded_label(algebra));
  bool ok = true;

  const ConfluenceReport conf = confluence_check(algebra);
  r.row("confluence", std::string(verdict(conf.confluent())) + "  " +
                          std::to_string(conf.triples_checked - conf.failures.size()) + "/" +
                          std::to_string(conf.triples_checked) + " overlaps resolve");
  for (const auto& f : conf.failures)
    r.line("    overlap " + p.alphabet()[f.k].name + p.alphabet()[f.j].name + p.alphabet()[f.i].name +
           " leaves " + render(f.difference, p.alphabet()));
  r.key("check.confluence", conf.confluent());
  ok = ok && conf.confluent();

  if (!p.coproduct()) {
    r.row("coproduct", "none attached");
    r.key("check.coproduct", std::string("none"));
  } else if (conf.confluent()) {
    HopfAlgebra h(algebra);
    const int w = weight_bound_for(o, p.alphabet());

    const RelationCompatibilityReport rel = check_relation_compatibility(h);
    std::size_t rel_passed = 0;
    for (const auto& c : rel.checks) {
      rel_passed += c.passed;
      r.row("relation " + c.relation,
            c.passed ? "ok" : "FAIL  residual " + render(c.residual, p.alphabet()));
      if (!c.passed) r.key("check.relation." + c.relation, false);
    }
    r.key("check.relations.passed", rel_passed);
    r.key("check.relations.total", rel.checks.size());

    const CoassociativityReport co = check_coassociativity(h);
    for (const auto& g : co.generators)
      r.row("coassociativity " + g.generator,
            std::string(verdict(g.passed())) +
                (g.left.is_zero() ? "" : "  (delta (x) id) delta = " + render(g.left, p.alphabet())));
    r.row("coassociativity", std::string(verdict(co.passed())) + "  " + std::to_string(co.monomials_checked) +
                                 " monomials");
    r.key("check.coassociativity", co.passed());

    const CounitReport cu = check_counit(h);
    r.row("counit", verdict(cu.passed()));
    for (const auto& f : cu.failures) r.line("    " + f);
    r.key("check.counit", cu.passed());

    const AntipodeTable table = antipode_candidate(h);
    const AntipodeReport an = verify_antipode(h, table, w);
    r.row("antipode (W<=" + std::to_string(w) + ")",
          std::string(verdict(an.passed())) + "  " + std::to_string(an.monomials_checked) + " monomials");
    for (std::size_t i = 0; i < an.failures.size() && i < 5; ++i) r.line("    " + an.failures[i]);
    r.key("check.antipode", an.passed());
    ok = ok && rel.passed() && co.passed() && cu.passed() && an.passed();

    if (o.seed) {
      constexpr std::size_t cases = 100;
      for (const PropertyResult& pr :
           {check_nf_morphism(algebra, *o.seed, cases, w), check_coproduct_morphism(h, *o.seed, cases, w),
            check_antipode_axiom(h, table, *o.seed, cases, w)}) {
        r.row(pr.name, std::string(verdict(pr.passed())) + "  " + std::to_string(pr.cases) + " cases, seed " +
                           std::to_string(*o.seed));
        ok = ok && pr.passed();
      }
      r.key("check.seed", std::to_string(*o.seed));
    }
  } else {
    r.row("coproduct", "skipped: presentation is not confluent");
  }
  if (!p.coproduct() && o.seed) {
    const PropertyResult pr = check_nf_morphism(algebra, *o.seed, 100, weight_bound_for(o, p.alphabet()));
    r.row(pr.name, std::string(verdict(pr.passed())) + "  " + std::to_string(pr.cases) + " cases");
    ok = ok && pr.passed();
  }
  r.line(std::string("result: ") + (ok ? "pass" : "fail"));
  r.key("check.result", ok);
  r.print(out);
  return ok ? Success : MathFailure;
}

int cmd_nf(const Options& o, std::ostream& out) {
  if (o.expr.empty()) throw CLI::ValidationError("--expr", "required");
  Algebra algebra(load_one(o));
  const PBWElement result = algebra.normal_form(parse_free_expression(algebra.presentation(), o.expr));
  const std::string text = render(result, algebra.alphabet());
  Report r("nf", algebra.presentation().name());
  r.line("  " + o.expr + "  ->  " + text);
  r.key("nf.input", o.expr);
  r.key("nf.result", text);
  r.print(out);
  return Success;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  Algebra algebra(load_one(o));
  Report r("hilbert", algebra.presentation().name());
  const PowerSeries h = hilbert_series(algebra, o.degree);
  r.row("presentation", graded_label(algebra) +
                            std::string(algebra.graded() ? "" : " (series of the associated graded)"));
  r.row("series", render_series(h));
  std::vector<std::string> coeffs;
  for (const auto& c : h.coefficients()) coeffs.push_back(c.get_str());
  r.key("hilbert.degree", std::to_string(o.degree));
  r.key("hilbert.coefficients", join(coeffs, ","));
  try {
    const ExponentSequence n = factor_series(h);
    const GkDimension gk = gk_dimension(n);
    const SupportReport support = support_interval_check(n);
    r.row("product form", render_product_form(n));
    r.row("exponents n", render_exponents(n));
    r.row("GK dimension", gk.infinite ? "infinite within the window" : gk.value.get_str());
    r.row("support", support.interval ? "interval [1," + std::to_string(support.ell) + ")" : "not an interval");
    r.key("hilbert.exponents", render_exponents(n));
    r.key("hilbert.gk", gk.infinite ? std::string("infinite") : gk.value.get_str());
    r.key("hilbert.support_interval", support.interval ? std::string("true") : std::string("false"));
    r.print(out);
    return Success;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotHopfAdmissible) throw;
    r.row("factorization", std::string("impossible: ") + e.detail());
    r.key("hilbert.exponents", std::string("none"));
    r.print(out);
    return MathFailure;
  }
}

int cmd_truncate(const Options& o, std::ostream& out) {
  Algebra algebra(load_one(o));
  const int w = weight_bound_for(o, algebra.alphabet());
  const TruncationAlgebra t = truncation_algebra(algebra, o.power, w);
  const CenterResult z = center_dim(t, t.generator_images());
  std::vector<std::string> basis, center;
  for (const Word& m : t.basis()) basis.push_back(render_word(m, algebra.alphabet()));
  for (const auto& v : z.basis) center.push_back(t.render(v));
  Report r("truncate", algebra.presentation().name() + "^+ / (" + algebra.presentation().name() + "^+)^" +
                           std::to_string(o.power));
  r.row("weight bound", std::to_string(w));
  r.row("dimension", std::to_string(t.dim()));
  r.row("basis", join(basis, ", "));
  r.row("center dimension", std::to_string(z.dim));
  r.row("center basis", join(center, "; "));
  r.row("center verified", z.verified ? "against every basis element" : "FAIL");
  r.key("truncation.power", std::to_string(o.power));
  r.key("truncation.weight_bound", std::to_string(w));
  r.key("truncation.dim", t.dim());
  r.key("truncation.basis", join(basis, ","));
  r.key("center.dim", z.dim);
  r.key("center.verified", z.verified);
  r.print(out);
  return z.verified ? Success : MathFailure;
}

int cmd_antipode(const Options& o, std::ostream& out) {
  HopfAlgebra h(load_one(o));
  require_confluent(h.algebra());
  const int w = o.weight_bound.value_or(6);
  const AntipodeTable table = antipode_candidate(h);
  const AntipodeReport axiom = verify_antipode(h, table, w);
  const AntipodeReport square = check_involutive_antipode(h, table, w);
  Report r("antipode", h.presentation().name());
  for (std::size_t g = 0; g < table.images.size(); ++g) {
    const std::string name = h.alphabet()[g].name;
    const std::string image = render(table.images[g], h.alphabet());
    r.row("S(" + name + ")", image);
    r.key("antipode.S." + name, image);
  }
  r.row("axioms (W<=" + std::to_string(w) + ")", std::string(verdict(axiom.passed())) + "  " +
                                                     std::to_string(axiom.monomials_checked) + " monomials");
  r.row("S^2 = id", std::string(verdict(square.passed())) + "  " + std::to_string(square.monomials_checked) +
                        " monomials");
  for (const auto& f : axiom.failures) r.line("    " + f);
  for (const auto& f : square.failures) r.line("    " + f);
  r.key("antipode.axioms", axiom.passed());
  r.key("antipode.involutive", square.passed());
  r.print(out);
  return axiom.passed() ? Success : MathFailure;
}

int cmd_primitives(const Options& o, std::ostream& out) {
  HopfAlgebra h(load_one(o));
  require_confluent(h.algebra());
  const int w = weight_bound_for(o, h.alphabet());
  const PrimitiveSpace p = primitive_space(h, w);
  Report r("primitives", h.presentation().name());
  r.row("weight bound", std::to_string(w));
  r.row("dimension", std::to_string(p.space.dim()));
  r.row("basis", render_subspace(p.index, p.space, h.alphabet()));
  r.key("primitives.weight_bound", std::to_string(w));
  r.key("primitives.dim", p.space.dim());
  r.key("primitives.basis", render_subspace(p.index, p.space, h.alphabet()));
  r.print(out);
  return Success;
}

int cmd_coradical(const Options& o, std::ostream& out) {
  HopfAlgebra h(load_one(o));
  require_confluent(h.algebra());
  const int w = weight_bound_for(o, h.alphabet());
  const CoradicalLevels c = coradical_levels(h, w);
  Report r("coradical", h.presentation().name());
  r.row("weight bound", std::to_string(w) + " (window dimension " + std::to_string(c.index.size() + 1) + ")");
  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    r.row("level " + std::to_string(n), "dim " + std::to_string(c.dim(n)));
    r.key("coradical.level." + std::to_string(n), c.dim(n));
  }
  r.row("stabilized", c.stabilized ? "yes" : "no");
  r.key("coradical.stabilized", c.stabilized ? std::string("true") : std::string("false"));
  r.print(out);
  return Success;
}

std::string render_multiset(const std::vector<int>& s) {
  std::vector<std::string> parts;
  for (int v : s) parts.push_back(std::to_string(v));
  return "(" + join(parts, ",") + ")";
}

int cmd_signature(const Options& o, std::ostream& out) {
  HopfAlgebra h(load_one(o));
  require_confluent(h.algebra());
  const int w = weight_bound_for(o, h.alphabet());
  const SignatureReport s = signature(h, w);
  Report r("signature", h.presentation().name());
  r.row("weight bound", std::to_string(w));
  for (const auto& [level, count] : s.counts)
    r.row("level " + std::to_string(level), std::to_string(count) + " new generator(s)");
  r.row("signature", render_multiset(s.signature));
  r.row("GK dimension", s.gk.infinite ? "infinite" : s.gk.value.get_str());
  r.row("complete", s.complete ? "yes" : "no: enlarge the weight bound");
  r.key("signature.value", render_multiset(s.signature));
  r.key("signature.complete", s.complete ? std::string("true") : std::string("false"));
  r.key("signature.gk", s.gk.infinite ? std::string("infinite") : s.gk.value.get_str());
  r.print(out);
  return Success;
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "bad weight list '" + text + "'");
    }
  }
  return out;
}

int cmd_gr(const Options& o, std::ostream& out) {
  Presentation p = load_one(o);
  if (!o.weights.empty()) {
    std::vector<int> w = parse_weights(o.weights);
    if (w.size() != p.generator_count())
      throw Error(ErrorKind::SyntaxError, "expected " + std::to_string(p.generator_count()) + " weights");
    p = p.with_weights(w);
  }
  const Presentation g = associated_graded(p);
  Report r("gr", p.name());
  std::vector<std::string> rels;
  for (const Relation& rel : g.nontrivial_relations()) rels.push_back(relation_name(g, rel));
  r.row("relations", rels.empty() ? "none (commutative)" : join(rels, ", "));
  r.line("");
  std::istringstream text(print_presentation(g));
  for (std::string line; std::getline(text, line);) r.line("  " + line);
  r.key("gr.relations", rels.empty() ? std::string("none") : join(rels, ";"));
  r.key("gr.commutative", rels.empty() ? std::string("true") : std::string("false"));
  r.print(out);
  return Success;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  Algebra algebra(load_one(o));
  const ObstructionReport ob = hopf_obstruction(algebra, o.degree);
  Report r("obstruct", algebra.presentation().name());
  const bool found = ob.verdict != ObstructionVerdict::None;
  r.row("verdict", found ? "no Hopf structure" : "none");
  r.row("criterion", ob.theorem);
  r.line("  " + ob.reason);
  r.key("obstruction.verdict", found ? std::string("no-hopf-structure") : std::string("none"));
  r.key("obstruction.theorem", ob.theorem);
  r.print(out);
  return found ? MathFailure : Success;
}

int cmd_compare_centers(const Options& o, std::ostream& out) {
  std::vector<Presentation> sources = load_sources(o);
  if (sources.size() != 2)
    throw CLI::ValidationError("source", "compare-centers needs exactly two presentations");
  struct Side {
    std::string name;
    std::size_t dim, center;
  };
  std::vector<Side> sides;
  Report r("compare-centers", sources[0].name() + " vs " + sources[1].name());
  for (std::size_t i = 0; i < 2; ++i) {
    Algebra algebra(sources[i]);
    const int w = weight_bound_for(o, algebra.alphabet());
    const TruncationAlgebra t = truncation_algebra(algebra, o.power, w);
    const CenterResult z = center_dim(t, t.generator_images());
    if (!z.verified) throw Error(ErrorKind::AxiomFailure, "center of " + algebra.presentation().name() + " failed verification");
    sides.push_back({algebra.presentation().name(), t.dim(), z.dim});
    r.row(algebra.presentation().name() + " truncation", "dim " + std::to_string(t.dim()) + ", center dim " +
                                                            std::to_string(z.dim) + " (W=" + std::to_string(w) + ")");
    const std::string side = i == 0 ? "left" : "right";
    r.key("compare." + side + ".name", algebra.presentation().name());
    r.key("compare." + side + ".dim", t.dim());
    r.key("compare." + side + ".center_dim", z.dim);
  }
  std::string verdict_text, key;
  if (sides[0].dim != sides[1].dim) {
    verdict_text = "not isomorphic: truncations have different dimensions";
    key = "not-isomorphic";
  } else if (sides[0].center != sides[1].center) {
    verdict_text = "not isomorphic: same truncation dimension, different center dimension";
    key = "not-isomorphic";
  } else {
    verdict_text = "inconclusive: dimensions and center dimensions agree";
    key = "inconclusive";
  }
  r.row("verdict", verdict_text);
  r.key("compare.power", std::to_string(o.power));
  r.key("compare.verdict", key);
  r.print(out);
  return Success;
}

int cmd_dump(const Options& o, std::ostream& out) {
  out << print_presentation(builtin(o.name));
  return Success;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotConfluent:
    case ErrorKind::AxiomFailure:
    case ErrorKind::NotHopfAdmissible:
    case ErrorKind::NonzeroConstantTerm:
      return MathFailure;
    case ErrorKind::Resource:
      return ResourceError;
    default:
      return UsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with PBW-type algebras and their Hopf structures", "hopfkit"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto sources = [&](CLI::App* sub) {
    sub->add_option("--builtin", o.builtins, "Built-in presentation (H6, J, L, U_n5, heis3, jordan, poly(d), qplane(q))");
    sub->add_option("--file", o.files, "Presentation file");
    sub->add_option("--corrupt", o.corrupt, "Apply a named corruption (drop-dd-correction)");
  };
  auto window = [&](CLI::App* sub) { sub->add_option("--weight-bound", o.weight_bound, "Weight window W")->check(CLI::NonNegativeNumber); };

  CLI::App* check = add("check", "Validation, confluence and Hopf axioms", cmd_check);
  sources(check);
  window(check);
  check->add_option("--seed", o.seed, "Also run randomized property checks with this seed");

  CLI::App* nf = add("nf", "Normal form of an expression", cmd_nf);
  sources(nf);
  nf->add_option("--expr", o.expr, "Expression in the generators")->required();

  CLI::App* hilbert = add("hilbert", "Hilbert series and its factorization", cmd_hilbert);
  sources(hilbert);
  hilbert->add_option("--degree", o.degree, "Truncation degree")->check(CLI::PositiveNumber);

  CLI::App* truncate = add("truncate", "A^+/(A^+)^k with its center", cmd_truncate);
  sources(truncate);
  window(truncate);
  truncate->add_option("--power", o.power, "Power k")->check(CLI::PositiveNumber);

  CLI::App* antipode = add("antipode", "Antipode on generators, axioms and S^2", cmd_antipode);
  sources(antipode);
  window(antipode);

  CLI::App* primitives = add("primitives", "Primitive elements in the weight window", cmd_primitives);
  sources(primitives);
  window(primitives);

  CLI::App* coradical = add("coradical", "Coradical filtration in the weight window", cmd_coradical);
  sources(coradical);
  window(coradical);

  CLI::App* sig = add("signature", "Signature from the coradical filtration", cmd_signature);
  sources(sig);
  window(sig);

  CLI::App* gr = add("gr", "Associated graded presentation", cmd_gr);
  sources(gr);
  gr->add_option("--weights", o.weights, "Comma-separated generator weights to apply first");

  CLI::App* obstruct = add("obstruct", "Tests that rule out any Hopf structure", cmd_obstruct);
  sources(obstruct);
  obstruct->add_option("--degree", o.degree, "Series degree")->check(CLI::PositiveNumber);

  CLI::App* compare = add("compare-centers", "Compare truncation centers of two presentations", cmd_compare_centers);
  sources(compare);
  window(compare);
  compare->add_option("--power", o.power, "Power k")->check(CLI::PositiveNumber);

  CLI::App* dump = add("dump-builtin", "Print a built-in in file form", cmd_dump);
  dump->add_option("name", o.name, "Built-in name")->required();

  std::vector<const char*> argv{"hopfkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
}

}  // namespace hopfkit::cli
