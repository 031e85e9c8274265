#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "lgraph/accommodating.hpp"
#include "lgraph/dynamics.hpp"
#include "lgraph/error.hpp"
#include "lgraph/graph.hpp"
#include "lgraph/graph_io.hpp"
#include "lgraph/ideals.hpp"
#include "lgraph/merged.hpp"
#include "lgraph/partition.hpp"
#include "lgraph/term.hpp"
#include "lgraph/term_expr.hpp"

namespace lgraph::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string dot_path;
  std::string json_path;
  bool strict = false;

  std::string range_word;
  std::string source_word;
  std::string kind = "bar";
  bool list = false;
  std::size_t level = 0;
  std::string max_set;
  bool verify = false;
  std::size_t lmax = 8;
  std::string expr;
  std::string equals;
  std::string mode = "base";
  std::size_t expand = 0;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

void emit_json(const Options& o, const json& j) {
  if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
}

json set_json(const LabelledGraph& g, VertexSet s) {
  json a = json::array();
  s.for_each([&](VertexId v) { a.push_back(g.vertex_name(v)); });
  return a;
}

json word_json(const LabelledGraph& g, std::span<const SymbolId> w) {
  json a = json::array();
  for (SymbolId s : w) a.push_back(g.symbol_name(s));
  return a;
}

std::string symbols_text(const LabelledGraph& g, const std::vector<SymbolId>& syms) {
  if (syms.empty()) return "-";
  std::string out;
  for (SymbolId a : syms) {
    if (!out.empty()) out += " ";
    out += g.symbol_name(a);
  }
  return out;
}

std::string sets_text(const LabelledGraph& g, const std::vector<VertexSet>& sets) {
  std::string out;
  for (VertexSet s : sets) {
    if (!out.empty()) out += " ";
    out += format_set(g, s);
  }
  return out;
}

std::string word_text(const LabelledGraph& g, std::span<const SymbolId> w) {
  return w.empty() ? std::string("(empty)") : format_word(g, w);
}

LabelledGraph load(const Options& o) { return load_graph(o.file, o.strict); }

void print_warnings(const LabelledGraph& g, std::ostream& err) {
  for (const auto& w : g.warnings()) err << "warning: " << w << "\n";
}

std::string wlr_text(const LabelledGraph& g, const WlrResult& r) {
  if (r.holds) return "yes";
  const auto& w = *r.witness;
  return "no (r(" + format_set(g, w.a) + "," + g.symbol_name(w.symbol) + ") n r(" +
         format_set(g, w.b) + "," + g.symbol_name(w.symbol) + ") differs from r(" +
         format_set(g, w.a & w.b) + "," + g.symbol_name(w.symbol) + "))";
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  PartitionTower tower(g);
  AccommodatingSet bar = bar_accommodating(g);
  WlrResult wlr = is_weakly_left_resolving(bar);

  out << "vertices: " << g.num_vertices() << "\n";
  out << "symbols: " << g.num_symbols() << " (";
  for (std::size_t a = 0; a < g.num_symbols(); ++a) out << (a ? " " : "") << g.symbol_name(a);
  out << ")\n";
  out << "edges: " << g.num_edges() << "\n";
  out << "stabilization depth: " << tower.stabilization_depth() << "\n";
  out << "stable classes: " << sets_text(g, tower.stable().classes) << "\n";
  out << "complement-closed family: " << bar.size() << " members";
  if (bar.atoms()) out << ", atoms " << sets_text(g, *bar.atoms());
  out << "\n";
  out << "weakly left-resolving: " << wlr_text(g, wlr) << "\n";
  out << "set-finite: " << (is_set_finite(bar) ? "yes" : "no") << "\n";

  json j;
  j["command"] = "check";
  j["graph"] = json::parse(to_json(g));
  j["stabilization_depth"] = tower.stabilization_depth();
  json classes = json::array();
  for (VertexSet c : tower.stable().classes) classes.push_back(set_json(g, c));
  j["stable_classes"] = classes;
  j["weakly_left_resolving"] = wlr.holds;

  auto query = [&](const char* name, const std::string& text, WordQuery (*fn)(const LabelledGraph&, std::string_view)) {
    WordQuery q = fn(g, text);
    if (!q.unknown_symbols.empty()) throw ParseError(0, "unknown symbol '" + q.unknown_symbols.front() + "'");
    out << name << "(" << text << "): " << format_set(g, q.result) << "\n";
    j[name] = set_json(g, q.result);
  };
  if (!o.range_word.empty()) query("r", o.range_word, &query_range);
  if (!o.source_word.empty()) query("s", o.source_word, &query_source);

  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(g));
  emit_json(o, j);
  return kOk;
}

int cmd_accommodating(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  if (o.kind != "minimal" && o.kind != "bar") throw ParseError(0, "--kind must be minimal or bar");
  AccommodatingSet fam = o.kind == "minimal" ? minimal_accommodating(g) : bar_accommodating(g);
  for (const auto& w : fam.warnings()) err << "warning: " << w << "\n";
  WlrResult wlr = is_weakly_left_resolving(fam);

  out << "kind: " << to_string(fam.kind()) << "\n";
  out << "members: " << fam.size() << "\n";
  if (fam.atoms()) out << "atoms: " << sets_text(g, *fam.atoms()) << "\n";
  else out << "atoms: none (not a Boolean algebra)\n";
  out << "weakly left-resolving: " << wlr_text(g, wlr) << "\n";
  out << "set-finite: " << (is_set_finite(fam) ? "yes" : "no") << "\n";

  json j;
  j["command"] = "accommodating";
  j["kind"] = to_string(fam.kind());
  j["size"] = fam.size();
  if (fam.atoms()) {
    json atoms = json::array();
    for (VertexSet a : *fam.atoms()) atoms.push_back(set_json(g, a));
    j["atoms"] = atoms;
  } else {
    j["atoms"] = nullptr;
  }
  j["weakly_left_resolving"] = wlr.holds;
  if (o.list) {
    json members = json::array();
    for (VertexSet m : fam.members()) {
      out << "  " << format_set(g, m) << "\n";
      members.push_back(set_json(g, m));
    }
    j["members"] = members;
  }
  emit_json(o, j);
  return kOk;
}

int cmd_gv(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  PartitionTower tower(g);
  const std::size_t depth = tower.stabilization_depth();
  json j;
  j["command"] = "gv";
  j["stabilization_depth"] = depth;
  json levels = json::array();
  std::size_t from = o.level ? o.level : 1;
  std::size_t to = o.level ? o.level : depth;
  out << "stabilization depth: " << depth << "\n";
  for (std::size_t l = from; l <= to; ++l) {
    LevelPartition p = tower.at(l);
    out << "level " << l << ": " << sets_text(g, p.classes) << (p.stabilized ? " (stable)" : "")
        << "\n";
    json classes = json::array();
    for (VertexSet c : p.classes) classes.push_back(set_json(g, c));
    levels.push_back({{"level", l}, {"stabilized", p.stabilized}, {"classes", classes}});
  }
  j["levels"] = levels;
  emit_json(o, j);
  return kOk;
}

int cmd_ideals(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  AccommodatingSet bar = bar_accommodating(g);
  IdealLattice lat = enumerate_hs(bar);
  out << "hereditary saturated sets: " << lat.nodes.size() << "\n";
  json j;
  j["command"] = "ideals";
  json nodes = json::array();
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    IdealDescriptor d = ideal_descriptor(bar, lat.nodes[i]);
    out << "  " << i << "  max " << format_set(g, d.max_element) << "  " << to_string(d.kind)
        << "  alphabet " << symbols_text(g, d.restricted_alphabet) << "\n";
    json gens = json::array();
    for (VertexSet s : d.generators) gens.push_back(set_json(g, s));
    json alpha = json::array();
    for (SymbolId a : d.restricted_alphabet) alpha.push_back(g.symbol_name(a));
    nodes.push_back({{"index", i},
                     {"max", set_json(g, d.max_element)},
                     {"kind", to_string(d.kind)},
                     {"generators", gens},
                     {"generators_truncated", d.generators_truncated},
                     {"restricted_alphabet", alpha},
                     {"spanning_set", d.spanning_set}});
  }
  out << "covering pairs:";
  json hasse = json::array();
  for (auto [a, b] : lat.hasse) {
    out << " " << a << "<" << b;
    hasse.push_back({a, b});
  }
  out << "\n";
  j["nodes"] = nodes;
  j["hasse"] = hasse;
  if (!o.dot_path.empty()) write_file(o.dot_path, hasse_to_dot(bar, lat));
  emit_json(o, j);
  return kOk;
}

int cmd_quotient(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  AccommodatingSet bar = bar_accommodating(g);
  HereditarySaturatedSet h = hs_from_max(bar, parse_set(g, o.max_set));
  QuotientLabelledSpace q = quotient_space(bar, h);
  IdealDescriptor d = ideal_descriptor(bar, h);
  out << "ideal: " << to_string(d.kind) << ", max " << format_set(g, h.max_element()) << "\n";
  out << "spanning set: " << d.spanning_set << "\n";
  out << "restricted alphabet: " << symbols_text(g, q.restricted_alphabet()) << "\n";
  out << "classes: " << q.classes().size() << " (" << sets_text(g, q.classes()) << ")\n";
  if (q.class_atoms()) out << "class atoms: " << sets_text(g, *q.class_atoms()) << "\n";
  out << "weakly left-resolving: " << (q.weakly_left_resolving() ? "yes" : "no") << "\n";
  out << "definitional check: " << (q.definitional_check_run() ? "passed" : "skipped") << "\n";

  json j;
  j["command"] = "quotient";
  j["max"] = set_json(g, h.max_element());
  j["kind"] = to_string(d.kind);
  json alpha = json::array();
  for (SymbolId a : q.restricted_alphabet()) alpha.push_back(g.symbol_name(a));
  j["restricted_alphabet"] = alpha;
  json classes = json::array();
  for (VertexSet c : q.classes()) classes.push_back(set_json(g, c));
  j["classes"] = classes;
  j["weakly_left_resolving"] = q.weakly_left_resolving();
  j["definitional_check"] = q.definitional_check_run();
  emit_json(o, j);
  return kOk;
}

int cmd_merge(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  MergedLabelledGraph m = merge(g);
  out << emit_dsl(m.merged);
  out << "# vertex map\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out << "#   " << g.vertex_name(v) << " -> " << m.merged.vertex_name(m.vertex_map[v]) << "\n";
  out << "# edge map\n";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    const Edge& f = m.merged.edges()[m.edge_map[i]];
    out << "#   " << g.vertex_name(e.src) << " " << g.vertex_name(e.dst) << " "
        << g.symbol_name(e.label) << " -> " << m.merged.vertex_name(f.src) << " "
        << m.merged.vertex_name(f.dst) << " " << m.merged.symbol_name(f.label) << "\n";
  }

  json j;
  j["command"] = "merge";
  j["merged"] = json::parse(to_json(m.merged));
  json vmap = json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    vmap[g.vertex_name(v)] = m.merged.vertex_name(m.vertex_map[v]);
  j["vertex_map"] = vmap;
  j["edge_map"] = m.edge_map;

  int code = kOk;
  if (o.verify) {
    MergeReport rep = verify_merge(g, m);
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.witness.empty()) out << ": " << c.witness;
      out << "\n";
      clauses.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    j["clauses"] = clauses;
    if (!rep.all_pass()) code = kNegative;
  }
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(m.merged, "F"));
  emit_json(o, j);
  return code;
}

json certificate_json(const LabelledGraph& g, const DisagreeableCertificate& c) {
  json j;
  j["kind"] = c.kind == DisagreeableCertificate::Kind::branching ? "branching" : "lasso";
  j["pivot"] = g.vertex_name(c.pivot);
  j["prefix"] = word_json(g, c.prefix);
  j["cycle"] = word_json(g, c.cycle);
  if (c.kind == DisagreeableCertificate::Kind::branching) j["other"] = word_json(g, c.other);
  return j;
}

void print_disagreeable(const LabelledGraph& g, const DisagreeableReport& r, std::ostream& out,
                        json& j) {
  out << "disagreeable: " << to_string(r.verdict) << "\n";
  out << "  levels checked: 1.." << r.lmax << ", stabilization depth " << r.stabilization_depth
      << "\n";
  if (r.refuting_class) {
    out << "  refuted by " << format_set(g, *r.refuting_class) << " at level " << r.refuting_level
        << "\n";
  }
  json classes = json::array();
  if (!r.refuting_class) {
    for (const auto& ev : r.classes) {
      out << "  " << format_set(g, ev.cls) << ": ";
      json c;
      c["class"] = set_json(g, ev.cls);
      c["first_level"] = ev.first_level;
      if (ev.certificate) {
        const auto& cert = *ev.certificate;
        if (cert.kind == DisagreeableCertificate::Kind::branching) {
          out << "branching at " << g.vertex_name(cert.pivot) << " via "
              << word_text(g, cert.prefix) << ", cycles " << format_word(g, cert.cycle) << " and "
              << format_word(g, cert.other) << "\n";
        } else {
          out << "lasso at " << g.vertex_name(cert.pivot) << " via " << word_text(g, cert.prefix)
              << ", cycle " << format_word(g, cert.cycle) << "\n";
        }
        c["certificate"] = certificate_json(g, cert);
      } else {
        out << "no certificate\n";
        c["certificate"] = nullptr;
      }
      classes.push_back(c);
    }
  }
  out << "  " << r.note << "\n";
  j["verdict"] = to_string(r.verdict);
  j["lmax"] = r.lmax;
  j["stabilization_depth"] = r.stabilization_depth;
  if (r.refuting_class) {
    j["refuting_class"] = set_json(g, *r.refuting_class);
    j["refuting_level"] = r.refuting_level;
  }
  j["classes"] = classes;
  j["note"] = r.note;
}

void print_cofinal(const LabelledGraph& g, const CofinalityReport& r, std::ostream& out, json& j) {
  out << "strongly cofinal: " << to_string(r.verdict) << "\n";
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    const auto& w = *r.witness;
    out << "  witness: from " << g.vertex_name(w.start) << " read " << word_text(g, w.prefix)
        << " then (" << format_word(g, w.cycle) << ")^inf, never inside the label-reachable set of "
        << format_set(g, w.target) << " (level " << w.target_level << ")\n";
    j["witness"] = {{"start", g.vertex_name(w.start)},
                    {"target", set_json(g, w.target)},
                    {"target_level", w.target_level},
                    {"prefix", word_json(g, w.prefix)},
                    {"cycle", word_json(g, w.cycle)}};
  }
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return kOk;
    case Verdict::refuted: return kNegative;
    case Verdict::unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_cofinal(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  CofinalityReport r = is_strongly_cofinal(g);
  json j;
  j["command"] = "cofinal";
  print_cofinal(g, r, out, j);
  emit_json(o, j);
  return verdict_code(r.verdict);
}

int cmd_disagreeable(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  DisagreeableReport r = is_disagreeable(g, o.lmax);
  json j;
  j["command"] = "disagreeable";
  print_disagreeable(g, r, out, j);
  emit_json(o, j);
  return verdict_code(r.verdict);
}

int cmd_simple(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  SimplicityVerdict v = is_simple(g, o.lmax);
  out << to_string(v.verdict) << "\n";
  json j;
  j["command"] = "simple";
  j["verdict"] = to_string(v.verdict);
  json cof, dis;
  print_cofinal(g, v.cofinality, out, cof);
  print_disagreeable(g, v.disagreeable, out, dis);
  j["cofinality"] = cof;
  j["disagreeable"] = dis;
  emit_json(o, j);
  switch (v.verdict) {
    case Simplicity::simple: return kOk;
    case Simplicity::not_simple: return kNegative;
    case Simplicity::unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_term(const Options& o, std::ostream& out, std::ostream& err) {
  LabelledGraph g = load(o);
  print_warnings(g, err);
  AccommodatingSet bar = bar_accommodating(g);
  WlrResult wlr = is_weakly_left_resolving(bar);
  if (!wlr.holds) throw PreconditionError("accommodating set is not weakly left-resolving");
  if (o.mode != "base" && o.mode != "quotient") throw ParseError(0, "--mode must be base or quotient");

  std::optional<QuotientLabelledSpace> q;
  std::unique_ptr<TermAlgebra> alg;
  if (o.mode == "quotient") {
    if (o.max_set.empty()) throw ParseError(0, "--mode quotient requires --max");
    q = quotient_space(bar, hs_from_max(bar, parse_set(g, o.max_set)));
    alg = std::make_unique<TermAlgebra>(*q);
  } else {
    alg = std::make_unique<TermAlgebra>(bar);
  }
  TermSum x = evaluate_term(*alg, o.expr);
  if (o.expand) x = alg->expand_level(x, o.expand);
  out << alg->format(x) << "\n";

  json j;
  j["command"] = "term";
  j["mode"] = o.mode;
  j["result"] = alg->format(x);
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"coefficient", to_string(c)},
                     {"alpha", word_json(g, m.alpha)},
                     {"set", set_json(g, m.set)},
                     {"beta", word_json(g, m.beta)},
                     {"degree", m.degree()}});
  }
  j["terms"] = terms;
  int code = kOk;
  if (!o.equals.empty()) {
    TermSum y = evaluate_term(*alg, o.equals);
    TermComparison cmp = alg->compare(x, y);
    out << (cmp.equal ? "equal" : "not shown equal: " + cmp.note) << "\n";
    j["equal"] = cmp.equal;
    if (!cmp.equal) code = kNegative;
  }
  emit_json(o, j);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of labelled graphs: accommodating sets, generalized vertices, "
               "hereditary saturated sets, quotients, merging, simplicity, and the monomial "
               "calculus.\nDecision procedures use subset constructions and are exponential in "
               "the number of vertices in the worst case (at most 64 vertices)."};
  app.name(args.empty() ? "lgraph" : args.front());
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&, std::ostream&)> action;

  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "graph in the .lgraph DSL")->required();
    sub->add_flag("--strict", o.strict, "reject duplicate edges instead of collapsing them");
    sub->add_option("--json", o.json_path, "write a JSON report to this path");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* check = add("check", "validate a graph and print basic invariants", cmd_check);
  check->add_option("--dot", o.dot_path, "write the graph as DOT");
  check->add_option("--range", o.range_word, "print r(word)");
  check->add_option("--source", o.source_word, "print s(word)");

  auto* acc = add("accommodating", "print an accommodating set", cmd_accommodating);
  acc->add_option("--kind", o.kind, "minimal or bar")->check(CLI::IsMember({"minimal", "bar"}));
  acc->add_flag("--list", o.list, "list every member");

  auto* gv = add("gv", "print the generalized vertices of each level", cmd_gv);
  gv->add_option("--level", o.level, "only this level")->check(CLI::PositiveNumber);

  auto* ideals = add("ideals", "enumerate hereditary saturated sets", cmd_ideals);
  ideals->add_option("--dot", o.dot_path, "write the Hasse diagram as DOT");

  auto* quot = add("quotient", "describe the quotient labelled space", cmd_quotient);
  quot->add_option("--max", o.max_set, "largest member of H, e.g. v1,v2")->required();

  auto* mrg = add("merge", "print the merged labelled graph", cmd_merge);
  mrg->add_flag("--verify", o.verify, "check the transport identities");
  mrg->add_option("--dot", o.dot_path, "write the merged graph as DOT");

  auto lmax_check = CLI::Range(std::size_t{1}, kMaxPeriodBound);
  add("cofinal", "decide strong cofinality", cmd_cofinal);
  add("disagreeable", "decide disagreeability", cmd_disagreeable)
      ->add_option("--lmax", o.lmax, "largest period bound checked exactly")
      ->check(lmax_check);
  add("simple", "decide simplicity of the C*-algebra", cmd_simple)
      ->add_option("--lmax", o.lmax, "largest period bound checked exactly")
      ->check(lmax_check);

  auto* term = add("term", "evaluate an expression in the span calculus", cmd_term);
  term->add_option("--eval", o.expr, "expression, e.g. \"s(a) * p({v}) * adj(s(a))\"")->required();
  term->add_option("--equals", o.equals, "compare the result with this expression");
  term->add_option("--mode", o.mode, "base or quotient")->check(CLI::IsMember({"base", "quotient"}));
  term->add_option("--max", o.max_set, "largest member of H for --mode quotient");
  term->add_option("--expand", o.expand, "expand to this word length");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("lgraph");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    return action(o, out, err);
  } catch (const SinkError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "error: " << o.file << ": " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace lgraph::cli
