#include "qposet/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include <json.hpp>

#include "qposet/adjoint.hpp"
#include "qposet/error.hpp"
#include "qposet/implication.hpp"
#include "qposet/relative.hpp"

namespace qposet {

namespace {

// Outcome of one theorem on one structure: not applicable, or applicable
// with an optional violation detail.
struct Outcome {
  bool applicable = false;
  std::optional<std::string> violation;
};

Outcome skip() { return {}; }
Outcome ok() { return {true, std::nullopt}; }
Outcome bad(std::string detail) { return {true, std::move(detail)}; }

std::string witness(const FinitePoset& p, const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + p.label(w[i]);
  return s + ")";
}

Outcome from_report(const FinitePoset& p, const CheckReport& r) {
  if (!r.applicable) return skip();
  if (r.passed()) return ok();
  std::string d;
  for (const auto& v : r.violations) {
    if (!d.empty()) d += "; ";
    d += v.clause + " " + witness(p, v.witness);
    if (!v.detail.empty()) d += " " + v.detail;
  }
  return bad(d);
}

Outcome from_equiv(const Equivalence& e) {
  if (e.agree()) return ok();
  return bad(std::string("left=") + (e.left ? "true" : "false") +
             " right=" + (e.right ? "true" : "false"));
}

Outcome implication(bool hypothesis, bool conclusion) {
  if (!hypothesis) return skip();
  return conclusion ? ok() : bad("hypothesis holds, conclusion fails");
}

bool orthogonal(const OrthoPoset& o) { return is_orthogonal_poset(o).holds; }

using Check = std::function<Outcome(const Instance&)>;

struct Theorem {
  std::string id;
  StructureClass cls;
  Check check;
};

Check ortho(std::function<Outcome(const OrthoPoset&)> f) {
  return [f = std::move(f)](const Instance& i) { return f(*i.ortho); };
}

Check sectioned(std::function<Outcome(const SectionedPoset&)> f) {
  return [f = std::move(f)](const Instance& i) { return f(*i.sectioned); };
}

const std::vector<Theorem>& theorems() {
  using SC = StructureClass;
  static const std::vector<Theorem> t = {
      {"th1", SC::Ortho,
       ortho([](const OrthoPoset& o) { return from_report(o.poset(), check_th1(o)); })},
      {"lemma-sharply", SC::Ortho,
       ortho([](const OrthoPoset& o) { return from_report(o.poset(), check_lemma_sharply(o)); })},
      {"para-iff-impl", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         return from_equiv(paraortho_iff_impl(o));
       })},
      {"i2-antitone", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!is_lattice(o.poset())) return skip();
         if (!antitone_first_arg_I2(o)) return bad("->_I2 not antitone in its first argument");
         if (orthogonal(o) && impl_I(o) != impl_I2(o).as_sets()) return bad("->_I differs from ->_I2");
         return ok();
       })},
      {"duality", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         return duality_check(o) ? ok() : bad("x ->_I y differs from y' ->_S x'");
       })},
      {"th2", SC::Sectioned,
       sectioned([](const SectionedPoset& s) { return from_report(s.poset(), check_th2(s)); })},
      {"para-via-i3", SC::Sectioned,
       sectioned([](const SectionedPoset& s) { return from_equiv(para_via_I3(s)); })},
      {"relpara-under-c", SC::Sectioned,
       sectioned([](const SectionedPoset& s) {
         try {
           return from_equiv(relpara_via_impl_under_C(s));
         } catch (const Error& e) {
           if (e.kind() == ErrorKind::CompatibilityFailed || e.kind() == ErrorKind::JoinMissing)
             return skip();
           throw;
         }
       })},
      {"i4-antitone", SC::Sectioned,
       sectioned([](const SectionedPoset& s) {
         if (!is_join_semilattice(s.poset())) return skip();
         if (!antitone_first_arg_I4(s)) return bad("->_I4 not antitone in its first argument");
         if (impl_I3(s) != impl_I4(s).as_sets()) return bad("->_I3 differs from ->_I4");
         return ok();
       })},
      {"lemadj", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!is_lattice(o.poset())) return skip();
         return lemma_AB_equiv(o) ? ok() : bad("(A) and (B) disagree");
       })},
      {"aisb", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         return lemma_AB_equiv(o) ? ok() : bad("(A) and (B) disagree");
       })},
      {"omidentity", SC::InvolutiveLattice,
       ortho([](const OrthoPoset& o) { return from_equiv(omidentity_equiv(o)); })},
      {"omui", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         const auto v = orthomodular_variants(o);
         if (v.om == v.om_u && v.om == v.om_ue) return ok();
         return bad(std::string("om=") + (v.om ? "1" : "0") + " om_u=" + (v.om_u ? "1" : "0") +
                    " om_ue=" + (v.om_ue ? "1" : "0"));
       })},
      {"sasom", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         return from_equiv(sasom_equiv(o));
       })},
      {"th3", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!is_lattice(o.poset())) return skip();
         auto r = th3_check(o);
         if (!r.applicable) return skip();
         return r.violated("th3") ? bad("(A) holds on a non-orthomodular lattice") : ok();
       })},
      {"posth3", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         auto r = th3_check(o);
         if (!r.applicable) return skip();
         return r.violated("posth3") ? bad("(A)21 holds on a non-orthomodular poset") : ok();
       })},
      {"adji", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o) || !try_residuate(o, impl_I(o)).adjoint()) return skip();
         return from_report(o.poset(), adji_consequences(o));
       })},
      {"adjibp", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o) || !is_boolean_poset(o) || !has_maximality(o.poset())) return skip();
         return adjibp_check(o) ? ok() : bad("Boolean poset with maximality is not a lattice");
       })},
      {"adjebp", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!orthogonal(o)) return skip();
         return from_equiv(adjebp_equiv(o));
       })},
      {"om-implies-para", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         return implication(is_orthomodular(o).holds, is_paraorthomodular(o).holds);
       })},
      {"tkadlec", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         return implication(is_weakly_boolean(o).holds && is_orthomodular(o).holds &&
                                has_maximality(o.poset()),
                            is_boolean_algebra(o));
       })},
      {"kleene-remark", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         if (!is_kleene_lattice(o)) return skip();
         const auto& p = o.poset();
         for (Element x = 0; x < p.size(); ++x)
           for (Element y = 0; y < p.size(); ++y)
             if (meet_is_bottom(p, x, y) && !p.leq(x, o(y)))
               return bad("x ∧ y = 0 but x not below y' at " + witness(p, {x, y}));
         return ok();
       })},
      {"benzene", SC::Ortho,
       ortho([](const OrthoPoset& o) {
         const bool para = is_paraorthomodular(o).holds;
         const auto b = find_benzene(o);
         if (para == !b.has_value()) return ok();
         return bad(para ? "hexagon found in a paraorthomodular poset"
                         : "no hexagon in a non-paraorthomodular poset");
       })},
      {"distributive-variants", SC::BoundedPoset,
       [](const Instance& i) {
         const auto d = distributive_identities(i.poset);
         const auto [f, s] = distributive_identities_nary(i.poset, 3);
         const bool base = is_distributive_poset(i.poset);
         for (bool v : d)
           if (v != base) return bad("binary identities disagree");
         if (f != base || s != base) return bad("ternary identities disagree with binary");
         return ok();
       }},
      {"mub-mlb", SC::BoundedPoset,
       [](const Instance& i) {
         if (!mub_complete_up_to(i.poset, 3)) return bad("mub-completeness fails for |M| <= 3");
         if (!mlb_complete_up_to(i.poset, 3)) return bad("mlb-completeness fails for |M| <= 3");
         if (!has_maximality(i.poset)) return bad("maximality fails");
         return ok();
       }},
  };
  return t;
}

const Theorem& find_theorem(const std::string& id) {
  for (const auto& t : theorems())
    if (t.id == id) return t;
  throw Error(ErrorKind::UnknownName, "unknown theorem id '" + id + "'");
}

std::string universe_name(StructureClass c, std::size_t lo, std::size_t hi) {
  return std::string(to_string(c)) + " n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : theorems()) v.push_back(t.id);
    return v;
  }();
  return ids;
}

std::vector<HarnessResult> run_harness(const HarnessSpec& spec, const std::vector<std::string>& ids) {
  std::vector<const Theorem*> todo;
  for (const auto& id : ids) todo.push_back(&find_theorem(id));

  std::map<StructureClass, std::vector<Instance>> universes;
  auto bound = [&](StructureClass c) {
    return c == StructureClass::Sectioned ? std::min(spec.max_n, spec.sectioned_max_n) : spec.max_n;
  };
  for (const auto* t : todo) {
    if (universes.contains(t->cls)) continue;
    EnumerationSpec es;
    es.min_n = spec.min_n;
    es.max_n = bound(t->cls);
    es.cls = t->cls;
    universes.emplace(t->cls, enumerate_all(es));
  }

  const std::size_t jobs = std::max<std::size_t>(spec.jobs, 1);
  std::vector<HarnessResult> out;
  for (const auto* t : todo) {
    const auto start = std::chrono::steady_clock::now();
    const auto& universe = universes.at(t->cls);
    std::vector<Outcome> outcomes(universe.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < universe.size(); k = next++) {
        try {
          outcomes[k] = t->check(universe[k]);
        } catch (const std::exception& e) {
          outcomes[k] = bad(std::string("error: ") + e.what());
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    HarnessResult r;
    r.id = t->id;
    r.universe = universe_name(t->cls, spec.min_n, bound(t->cls));
    r.instances = universe.size();
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if (!outcomes[k].applicable) continue;
      ++r.applicable;
      if (outcomes[k].violation) r.violations.push_back({universe[k].code, *outcomes[k].violation});
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_json(const HarnessSpec& spec, const std::vector<HarnessResult>& results) {
  nlohmann::ordered_json j;
  j["min_n"] = spec.min_n;
  j["max_n"] = spec.max_n;
  j["sectioned_max_n"] = spec.sectioned_max_n;
  auto& arr = j["theorems"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json t;
    t["id"] = r.id;
    t["universe"] = r.universe;
    t["instances"] = r.instances;
    t["applicable"] = r.applicable;
    t["passed"] = r.passed();
    auto& vs = t["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) vs.push_back({{"instance", v.instance}, {"detail", v.detail}});
    arr.push_back(std::move(t));
    all = all && r.passed();
  }
  j["passed"] = all;
  return j.dump(2) + "\n";
}

std::string report_text(const std::vector<HarnessResult>& results) {
  std::string out;
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-22s %-4s %-30s %7zu checked %7zu applicable %4zu violations %9.1f ms\n",
                  r.id.c_str(), r.passed() ? "ok" : "FAIL", r.universe.c_str(), r.instances,
                  r.applicable, r.violations.size(), r.wall_ms);
    out += line;
    for (const auto& v : r.violations) out += "    " + v.instance + ": " + v.detail + "\n";
  }
  return out;
}

}  // namespace qposet
