// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "qposet/adjoint.hpp"
#include "qposet/amalgam.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/harness.hpp"
#include "qposet/io.hpp"
#include "qposet/relative.hpp"

using namespace qposet;

namespace {

const std::filesystem::path kFixtures = QPOSET_FIXTURES;

std::string path(const std::string& name) { return (kFixtures / name).string(); }
OrthoPoset ortho(const std::string& name) { return to_ortho(load_structure(path(name + ".poset"))); }

std::vector<Element> labels(const FinitePoset& p, std::initializer_list<const char*> ls) {
  std::vector<Element> v;
  for (auto l : ls) v.push_back(*p.find(l));
  return v;
}

/// Collects failed expectations; an empty list means pass.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, std::string what) {
    if (!ok) failures.push_back(std::move(what));
  }
};

using Criterion = std::function<void(Checks&, std::string& note)>;

void figure_profiles(Checks& c, std::string& note) {
  for (const char* name : {"fig1a", "fig1b", "fig1c"}) {
    const auto o = ortho(name);
    const std::string n = name;
    c.expect(is_paraorthomodular(o).holds, n + " paraorthomodular");
    c.expect(!is_orthomodular(o).holds, n + " not orthomodular");
    c.expect(!is_sharply_paraorthomodular(o).holds, n + " not sharply");
  }
  for (const char* name : {"fig2a", "fig2b"})
    c.expect(is_sharply_paraorthomodular(ortho(name)).holds, std::string(name) + " sharply");
  c.expect(is_lattice(ortho("fig2a").poset()), "fig2a lattice");
  const auto f2b = ortho("fig2b");
  c.expect(!is_lattice(f2b.poset()), "fig2b not a lattice");
  const auto om = is_orthomodular(f2b);
  c.expect(!om.holds && om.witness == labels(f2b.poset(), {"b", "d'"}), "fig2b orthomodular witness (b,d')");
  const auto f7 = ortho("fig7");
  c.expect(is_lattice(f7.poset()), "fig7 lattice");
  const auto p7 = is_paraorthomodular(f7);
  c.expect(!p7.holds && p7.witness == labels(f7.poset(), {"a", "b'"}), "fig7 paraorthomodular witness (a,b')");
  const auto f3 = ortho("fig3");
  c.expect(is_kleene_lattice(f3) && !is_orthomodular(f3).holds, "fig3 Kleene, not orthomodular");
  const auto f4 = ortho("fig4");
  c.expect(!is_paraorthomodular(f4).holds && find_benzene(f4).has_value(), "fig4 hexagon");
  c.expect(is_sharply_paraorthomodular(ortho("fig5")).holds, "fig5 sharply");
  const auto f8 = ortho("fig8");
  c.expect(is_lattice(f8.poset()) && is_paraorthomodular(f8).holds && !is_orthomodular(f8).holds,
           "fig8 paraorthomodular lattice, not orthomodular");
  note = "10 figures";
}

void fig1a_table(Checks& c, std::string& note) {
  const auto s = to_sectioned(load_structure(path("fig1a.poset")));
  const auto& p = s.poset();
  const std::vector<std::vector<std::string>> expected = {
      {"1", "1", "1", "1", "1", "1"},        {"a'", "1", "{a',b'}", "1", "1", "1"},
      {"b'", "{a',b'}", "1", "1", "1", "1"}, {"a", "b'", "b'", "1", "b'", "1"},
      {"b", "a'", "a'", "a'", "1", "1"},     {"0", "a", "b", "a'", "b'", "1"}};
  const auto t = impl_I3(s);
  std::size_t ok = 0;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      const bool hit = p.format(t(x, y), false) == expected[x][y];
      ok += hit;
      c.expect(hit, p.label(x) + "->" + p.label(y));
    }
  note = std::to_string(ok) + "/36 cells";
}

void amalgams(Checks& c, std::string& note) {
  const auto tri = classify_amalgam(load_family(path("greechie_triangle.family")));
  c.expect(tri.direct_para && !tri.direct_sharply, "triangle paraorthomodular, not sharply");
  c.expect(tri.loop3_witness && tri.loop3_witness_confirmed, "triangle a1 v a3 missing");
  c.expect(tri.agree() && !tri.theorem_violation(), "triangle predicted = direct");
  const auto sq = classify_amalgam(load_family(path("greechie_square.family")));
  c.expect(sq.direct_sharply && !sq.direct_lattice, "square sharply, not lattice");
  c.expect(sq.agree() && !sq.theorem_violation(), "square predicted = direct");
  const auto two = classify_amalgam(load_family(path("two_blocks.family")));
  c.expect(two.direct_para && two.direct_lattice, "two blocks paraorthomodular lattice");
  c.expect(two.agree() && !two.theorem_violation(), "two blocks predicted = direct");
  note = "triangle, square, two blocks";
}

void harness(Checks& c, std::string& note) {
  HarnessSpec spec;
  spec.max_n = 6;
  spec.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::size_t checked = 0;
  for (const auto& r : run_harness(spec, theorem_ids())) {
    c.expect(r.passed(), r.id + " at n<=6");
    checked += r.applicable;
  }
  spec.max_n = 7;
  for (const auto& r : run_harness(spec, theorem_ids())) {
    c.expect(r.passed(), r.id + " at n<=7");
    checked += r.applicable;
  }
  note = std::to_string(theorem_ids().size()) + " statements, " + std::to_string(checked) +
         " applicable checks, n<=6 and n<=7";
}

void searches(Checks& c, std::string& note) {
  EnumerationSpec six;
  six.min_n = 6;
  six.max_n = 6;
  const auto hit = find_counterexample("paraorthomodular", "orthomodular", six);
  c.expect(hit && hit->n == 6, "paraorthomodular and not orthomodular at n=6");
  const auto f2b = make_instance(ortho("fig2b"));
  c.expect(f2b.n == 10 && eval_predicate("sharply-paraorthomodular", f2b) && eval_predicate("!lattice", f2b),
           "Fig. 2(b) sharply and not a lattice");
  EnumerationSpec seven;
  seven.max_n = 7;
  c.expect(!find_counterexample("orthomodular", "paraorthomodular", seven), "orthomodular implies para up to 7");
  note = hit ? "first n=6 hit " + hit->code : "no n=6 hit";
}

void fig5_covers(Checks& c, std::string& note) {
  const auto f = load_family(path("fig5.family"));
  const auto a = build_amalgam(f);
  const auto r = cover_transfer(f, a);
  const auto& p = a.carrier.poset();
  c.expect(r.clauses.passed(), "cover clauses hold");
  c.expect(r.exceptions.size() == 1, "exactly one exception");
  if (!r.exceptions.empty()) {
    const auto& e = r.exceptions.front();
    c.expect(e.x == *p.find("a") && e.y == *p.find("a'"), "exception is (a,a')");
    c.expect(e.interlopers.contains(*p.find("c")), "interloper c");
    note = "(" + p.label(e.x) + "," + p.label(e.y) + ") interlopers " + p.format(e.interlopers);
  }
}

void round_trip(Checks& c, std::string& note) {
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures)) {
    const auto ext = e.path().extension();
    const auto text = read_file(e.path());
    if (ext == ".poset") {
      const auto f = parse_structure(text);
      c.expect(emit_structure(f) == text, e.path().filename().string() + " text");
      c.expect(parse_structure(emit_structure_json(f)).same_content(f), e.path().filename().string() + " json");
    } else if (ext == ".family") {
      (void)load_family(e.path());
    } else {
      continue;
    }
    ++files;
  }
  std::string reports[3];
  const std::vector<std::vector<std::string>> runs = {{"verify", "--max-n", "6", "--json"},
                                                      {"verify", "--max-n", "6", "--json"},
                                                      {"verify", "--max-n", "6", "--json", "--jobs", "8"}};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::ostringstream out, err;
    c.expect(cli::run(runs[i], out, err) == cli::kOk, "verify run " + std::to_string(i));
    reports[i] = out.str();
  }
  c.expect(!reports[0].empty() && reports[0] == reports[1] && reports[1] == reports[2], "byte-identical reports");
  note = std::to_string(files) + " fixtures, 3 verify runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<double, Criterion>> criteria = {
      {1.0, figure_profiles}, {0, fig1a_table}, {5.0, amalgams}, {600.0, harness},
      {0, searches},          {0, fig5_covers}, {0, round_trip}};
  int failed = 0;
  std::cout << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto [limit, run] = criteria[i];
    Checks c;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c, note);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) c.failures.push_back("took " + std::to_string(secs) + " s");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << note;
    std::cout << " (" << secs << " s)";
    for (const auto& f : c.failures) std::cout << "\n    failed: " << f;
    std::cout << '\n';
  }
  return failed;
}
