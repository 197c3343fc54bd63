#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qposet/adjoint.hpp"
#include "qposet/amalgam.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/error.hpp"
#include "qposet/harness.hpp"
#include "qposet/implication.hpp"
#include "qposet/io.hpp"
#include "qposet/relative.hpp"
#include "qposet/render.hpp"

namespace qposet::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string witness(const FinitePoset& p, const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + p.label(w[i]);
  return s + ")";
}

// A structure file loaded at the richest level its content allows.
struct Loaded {
  StructureFile file;
  Instance inst;
};

Loaded load(const std::string& path) {
  auto f = load_structure(path);
  if (f.has_sections()) {
    auto s = to_sectioned(f);
    return {std::move(f), make_instance(s)};
  }
  if (f.has_involution()) {
    auto o = to_ortho(f);
    return {std::move(f), make_instance(o)};
  }
  auto p = to_poset(f);
  const std::size_t n = p.size();
  return {std::move(f), Instance{n, StructureClass::BoundedPoset, canonical_code(p), std::move(p),
                                 std::nullopt, std::nullopt}};
}

struct Row {
  bool holds = false;
  std::string detail;
};

using Probe = std::function<Row(const Instance&)>;

Row from_verdict(const FinitePoset& p, const Verdict& v) {
  Row r{v.holds, {}};
  if (!v.holds && !v.witness.empty()) r.detail = "witness " + witness(p, v.witness);
  if (!v.note.empty()) r.detail += (r.detail.empty() ? "" : "; ") + v.note;
  return r;
}

template <class F>
Probe ortho_verdict(F f) {
  return [f](const Instance& i) { return from_verdict(i.poset, f(*i.ortho)); };
}

// Predicates that can explain a failure. Everything else in the registry
// reports a bare verdict.
const std::map<std::string, Probe>& probes() {
  static const std::map<std::string, Probe> m = {
      {"orthogonal", ortho_verdict(is_orthogonal_poset)},
      {"paraorthomodular", ortho_verdict(is_paraorthomodular)},
      {"sharply-paraorthomodular", ortho_verdict(is_sharply_paraorthomodular)},
      {"complementation", ortho_verdict(is_complementation)},
      {"orthomodular", ortho_verdict(is_orthomodular)},
      {"weakly-boolean", ortho_verdict(is_weakly_boolean)},
      {"regular",
       [](const Instance& i) {
         try {
           return from_verdict(i.poset, is_regular(*i.ortho));
         } catch (const Error& e) {
           return Row{false, "undefined term at " + witness(i.poset, e.witness())};
         }
       }},
      {"relatively-paraorthomodular",
       [](const Instance& i) {
         return from_verdict(i.poset, is_relatively_paraorthomodular(*i.sectioned));
       }},
      {"compatible",
       [](const Instance& i) {
         try {
           return from_verdict(i.poset, check_C(*i.sectioned));
         } catch (const Error& e) {
           return Row{false, "join missing at " + witness(i.poset, e.witness())};
         }
       }},
      {"lattice",
       [](const Instance& i) {
         const auto& p = i.poset;
         for (Element x = 0; x < p.size(); ++x)
           for (Element y = x + 1; y < p.size(); ++y) {
             if (!join(p, x, y)) return Row{false, "no join of " + witness(p, {x, y})};
             if (!meet(p, x, y)) return Row{false, "no meet of " + witness(p, {x, y})};
           }
         return Row{true, {}};
       }},
  };
  return m;
}

bool needs_involution(const std::string& name) {
  static const std::vector<std::string> plain = {"lattice", "join-semilattice", "distributive",
                                                 "maximality", "involutive"};
  return std::find(plain.begin(), plain.end(), name) == plain.end();
}

bool needs_sections(const std::string& name) {
  return name == "relatively-paraorthomodular" || name == "compatible";
}

bool available(const std::string& name, const Instance& i) {
  if (needs_sections(name)) return i.sectioned.has_value();
  if (needs_involution(name)) return i.ortho.has_value();
  return true;
}

int cmd_check(const std::string& path, const std::vector<std::string>& requested, std::ostream& out,
              std::ostream& err) {
  const auto loaded = load(path);
  const auto& inst = loaded.inst;
  std::vector<std::string> names = requested;
  if (names.empty())
    for (const auto& n : predicate_names())
      if (available(n, inst)) names.push_back(n);
  for (const auto& n : names) {
    (void)find_predicate(n);  // UnknownName
    if (n.front() == '!') throw Error(ErrorKind::UnknownName, "negated names are for filters only");
    if (!available(n, inst))
      throw Error(ErrorKind::PreconditionUnmet,
                  "'" + n + "' needs " + (needs_sections(n) ? "section maps" : "an involution"));
  }

  const std::string name = loaded.file.name.empty() ? path : loaded.file.name;
  out << name << ": " << inst.n << " elements, " << to_string(inst.cls) << "\n";
  bool all = true;
  for (const auto& n : names) {
    Row r;
    if (auto it = probes().find(n); it != probes().end())
      r = it->second(inst);
    else
      r.holds = eval_predicate(n, inst);
    all = all && r.holds;
    out << "  " << n << ": " << (r.holds ? "true" : "false");
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << "\n";
  }
  (void)err;
  if (requested.empty()) return kOk;
  return all ? kOk : kFailed;
}

int cmd_table(const std::string& path, const std::string& op, std::ostream& out) {
  const auto f = load_structure(path);
  if (op == "i3" || op == "i4") {
    const auto s = to_sectioned(f);
    if (op == "i3") out << render_table(s.poset(), impl_I3(s));
    else out << render_table(s.poset(), impl_I4(s));
    return kOk;
  }
  const auto o = to_ortho(f);
  if (op == "i1") out << render_table(o.poset(), impl_I(o));
  else if (op == "i2") out << render_table(o.poset(), impl_I2(o));
  else if (op == "sasaki-impl") out << render_table(o.poset(), sasaki_impl(o));
  else if (op == "sasaki-prod") out << render_table(o.poset(), sasaki_proj(o), "*");
  return kOk;
}

int cmd_amalgam(const std::string& path, std::optional<std::size_t> loops, bool dot, bool covers_flag,
                std::ostream& out) {
  const auto f = load_family(path);
  const auto a = build_amalgam(f);
  const auto& p = a.carrier.poset();
  const std::string name = std::filesystem::path(path).stem().string();
  if (dot) {
    out << export_dot(f, a, name);
    return kOk;
  }
  if (loops) {
    for (const auto& l : find_loops(f, *loops)) {
      out << "loop";
      for (auto b : l.blocks) out << " " << f.blocks()[b].name;
      out << " atoms";
      for (auto x : l.atoms) out << " " << p.label(x);
      out << "\n";
    }
    return kOk;
  }
  const auto c = classify_amalgam(f);
  auto yn = [](bool b) { return b ? "true" : "false"; };
  out << name << ": " << f.block_count() << " blocks, " << f.carrier_size() << " elements\n";
  out << "  loops of order 3: " << c.loops3 << "\n";
  out << "  loops of order 4: " << c.loops4 << "\n";
  out << "  paraorthomodular:          predicted " << yn(c.predicted_para) << ", computed "
      << yn(c.direct_para) << "\n";
  out << "  sharply paraorthomodular:  predicted " << yn(c.predicted_sharply) << ", computed "
      << yn(c.direct_sharply) << "\n";
  out << "  lattice:                   predicted " << yn(c.predicted_lattice) << ", computed "
      << yn(c.direct_lattice) << "\n";
  if (c.loop3_witness)
    out << "  join of " << p.label(c.loop3_witness->first) << " and " << p.label(c.loop3_witness->second)
        << ": " << (c.loop3_witness_confirmed ? "missing" : "EXISTS") << "\n";
  out << "  two-block unions are lattices: " << yn(c.two_block_unions_are_lattices) << "\n";
  if (covers_flag) {
    const auto ct = cover_transfer(f, a);
    for (const auto& v : ct.clauses.violations)
      out << "  cover clause " << v.clause << " violated at " << witness(p, {v.witness[0], v.witness[1]})
          << "\n";
    for (const auto& e : ct.exceptions)
      out << "  cover in " << f.blocks()[e.block].name << " only: (" << p.label(e.x) << ","
          << p.label(e.y) << ") interlopers " << p.format(e.interlopers) << "\n";
  }
  out << "  verdict: " << (c.theorem_violation() ? "VIOLATION" : "consistent") << "\n";
  return c.theorem_violation() ? kViolation : kOk;
}

int cmd_verify(const std::string& theorems, const HarnessSpec& spec, bool json,
               const std::string& report_path, std::ostream& out) {
  std::vector<std::string> ids =
      theorems == "all" ? theorem_ids() : split(theorems, ',');
  if (ids.empty()) throw Error(ErrorKind::UnknownName, "no theorem ids given");
  if (spec.max_n < 2 || spec.max_n > kMaxEnumerationSize)
    throw Error(ErrorKind::PreconditionUnmet,
                "--max-n must lie in 2.." + std::to_string(kMaxEnumerationSize));
  const auto results = run_harness(spec, ids);
  const auto report = report_json(spec, results);
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, "cannot write '" + report_path + "'");
    f << report;
  }
  if (json) out << report;
  else out << report_text(results);
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); })
             ? kOk
             : kFailed;
}

int cmd_search(const std::string& implies, EnumerationSpec spec, std::ostream& out) {
  const auto ab = split(implies, ',');
  if (ab.size() != 2) throw Error(ErrorKind::UnknownName, "--implies expects A,B");
  const auto found = find_counterexample(ab[0], ab[1], spec);
  if (!found) {
    out << "no structure with " << ab[0] << " and not " << ab[1] << " for n = " << spec.min_n
        << ".." << spec.max_n << " (" << to_string(spec.cls) << ")\n";
    return kOk;
  }
  out << "counterexample " << found->code << " (" << found->n << " elements)\n";
  StructureFile f;
  if (found->sectioned) f = to_structure_file(*found->sectioned, "counterexample");
  else if (found->ortho) f = to_structure_file(*found->ortho, "counterexample");
  else f = to_structure_file(found->poset, "counterexample");
  out << emit_structure(f);
  return kFailed;
}

int cmd_export(const std::string& path, const std::string& format, std::ostream& out) {
  auto f = load_structure(path);
  if (format == "text") {
    out << emit_structure(f);
    return kOk;
  }
  if (format == "json") {
    out << emit_structure_json(f);
    return kOk;
  }
  const std::string name = f.name.empty() ? std::filesystem::path(path).stem().string() : f.name;
  if (f.has_involution()) out << export_dot(to_ortho(f), name);
  else out << export_dot(to_poset(f), name);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ortho-structures: predicates, implication tables, amalgams, theorem sweeps"};
  app.name("qposet");
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> predicates;
  auto* check = app.add_subcommand("check", "Evaluate predicates on a structure file");
  check->add_option("file", file, "Structure file")->required();
  check->add_option("--predicate,-p", predicates, "Predicate name (repeatable); default: all that apply");

  std::string op;
  auto* table = app.add_subcommand("table", "Print an operator table");
  table->add_option("file", file, "Structure file")->required();
  table->add_option("--op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"i1", "i2", "i3", "i4", "sasaki-impl", "sasaki-prod"}));

  std::optional<std::size_t> loops;
  bool classify = false, dot = false, covers_flag = false;
  auto* amalgam = app.add_subcommand("amalgam", "Analyse a pasted family of blocks");
  amalgam->add_option("file", file, "Family file")->required();
  auto* o_classify = amalgam->add_flag("--classify", classify, "Predicted and computed verdicts (default)");
  auto* o_loops = amalgam->add_option("--loops", loops, "List atomic loops of this order");
  auto* o_dot = amalgam->add_flag("--export-dot", dot, "Graphviz drawing of the amalgam");
  amalgam->add_flag("--covers", covers_flag, "With --classify: report block covers that do not transfer");
  o_classify->excludes(o_loops)->excludes(o_dot);
  o_loops->excludes(o_dot);

  std::string theorems = "all";
  HarnessSpec hs;
  bool json = false;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run the theorem harness");
  verify->add_option("--theorems", theorems, "Comma-separated ids, or 'all'")->capture_default_str();
  verify->add_option("--max-n", hs.max_n, "Largest structure size")->required();
  verify->add_option("--min-n", hs.min_n, "Smallest structure size")->capture_default_str();
  verify->add_option("--sectioned-max-n", hs.sectioned_max_n, "Size bound for sectioned sweeps")
      ->capture_default_str();
  verify->add_option("--jobs,-j", hs.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--json", json, "Print the JSON report instead of the summary");
  verify->add_option("--report", report_path, "Also write the JSON report to this file");

  std::string implies, cls = "ortho-poset";
  EnumerationSpec es;
  auto* search = app.add_subcommand("search", "Smallest structure with A but not B");
  search->add_option("--implies", implies, "A,B")->required();
  search->add_option("--max-n", es.max_n, "Largest structure size")->required();
  search->add_option("--min-n", es.min_n, "Smallest structure size")->capture_default_str();
  search->add_option("--class", cls, "Structure class")
      ->capture_default_str()
      ->check(CLI::IsMember({"bounded-poset", "ortho-poset", "sectioned-poset", "lattice",
                             "involutive-lattice"}));
  search->add_option("--budget", es.budget, "Cap on generated structures (0 = none)");

  std::string format = "dot";
  bool as_dot = false, as_text = false, as_json = false;
  auto* exp = app.add_subcommand("export", "Re-emit a structure file");
  exp->add_option("file", file, "Structure file")->required();
  auto* f_dot = exp->add_flag("--dot", as_dot, "Graphviz (default)");
  auto* f_text = exp->add_flag("--text", as_text, "Canonical text form");
  auto* f_json = exp->add_flag("--json", as_json, "JSON form");
  f_dot->excludes(f_text)->excludes(f_json);
  f_text->excludes(f_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*check) return cmd_check(file, predicates, out, err);
    if (*table) return cmd_table(file, op, out);
    if (*amalgam) return cmd_amalgam(file, loops, dot, covers_flag, out);
    if (*verify) return cmd_verify(theorems, hs, json, report_path, out);
    if (*search) {
      es.cls = *parse_structure_class(cls);
      return cmd_search(implies, es, out);
    }
    if (*exp) return cmd_export(file, as_text ? "text" : as_json ? "json" : "dot", out);
  } catch (const Error& e) {
    err << "qposet: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::UnknownName:
      case ErrorKind::TooManyElements:
        return kBadInput;
      case ErrorKind::BudgetExceeded:
        return kBudget;
      default:
        // Semantic problems with the input structure (not a poset, missing
        // join, ...) are input errors too.
        return kBadInput;
    }
  }
  return kBadInput;
}

}  // namespace qposet::cli
