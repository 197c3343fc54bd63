#include "qposet/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "qposet/error.hpp"

namespace qposet {

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::BoundedPoset: return "bounded-poset";
    case StructureClass::Ortho: return "ortho-poset";
    case StructureClass::Sectioned: return "sectioned-poset";
    case StructureClass::Lattice: return "lattice";
    case StructureClass::InvolutiveLattice: return "involutive-lattice";
  }
  return "?";
}

std::optional<StructureClass> parse_structure_class(std::string_view s) {
  for (auto c : {StructureClass::BoundedPoset, StructureClass::Ortho, StructureClass::Sectioned,
                 StructureClass::Lattice, StructureClass::InvolutiveLattice})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

// Inner elements (everything but bottom and top) are numbered 0..m-1 and a
// strict order on them is stored as `below[k]` = bitmask of j < k.
using Rel = std::vector<std::uint32_t>;

bool rel_lt(const Rel& r, std::size_t i, std::size_t j) { return (r[j] >> i) & 1U; }

// Code of `r` read in the order `ext`, which must be a linear extension:
// bit (i, j) for i < j says ext[i] < ext[j]; pairs go column by column.
std::uint64_t code_along(const Rel& r, const std::vector<std::size_t>& ext) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < ext.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) code = code << 1 | (rel_lt(r, ext[i], ext[j]) ? 1U : 0U);
  return code;
}

template <class F>
void for_each_linear_extension(const Rel& r, F&& f) {
  const std::size_t m = r.size();
  std::vector<std::size_t> ext;
  std::uint32_t used = 0;
  auto rec = [&](auto&& self) -> void {
    if (ext.size() == m) {
      f(ext);
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if ((used >> k) & 1U) continue;
      if ((r[k] & ~used) != 0) continue;  // something below k is still unplaced
      used |= 1U << k;
      ext.push_back(k);
      self(self);
      ext.pop_back();
      used &= ~(1U << k);
    }
  };
  rec(rec);
}

struct Canon {
  std::uint64_t code = 0;
  std::vector<std::size_t> ext;  // ext[new] = old
};

Canon canonicalize(const Rel& r) {
  Canon best;
  bool have = false;
  for_each_linear_extension(r, [&](const std::vector<std::size_t>& ext) {
    const auto c = code_along(r, ext);
    if (!have || c < best.code) {
      best = {c, ext};
      have = true;
    }
  });
  return best;
}

Rel relabel(const Rel& r, const std::vector<std::size_t>& ext) {
  const std::size_t m = r.size();
  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[ext[i]] = i;
  Rel out(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (rel_lt(r, a, b)) out[pos[b]] |= 1U << pos[a];
  return out;
}

// All naturally labelled strict orders on m points: each new point sits
// above a down-closed set of earlier points.
void natural_orders(std::size_t m, const std::function<void(const Rel&)>& f) {
  Rel r;
  auto rec = [&](auto&& self) -> void {
    const std::size_t k = r.size();
    if (k == m) {
      f(r);
      return;
    }
    for (std::uint32_t s = 0; s < (1U << k); ++s) {
      bool closed = true;
      for (std::size_t j = 0; j < k && closed; ++j)
        if ((s >> j & 1U) && (r[j] & ~s)) closed = false;
      if (!closed) continue;
      r.push_back(s);
      self(self);
      r.pop_back();
    }
  };
  rec(rec);
}

struct Shape {
  std::uint64_t code;
  Rel rel;                                       // canonical labelling
  std::vector<std::vector<std::size_t>> autos;   // automorphisms, as ext maps
};

// Canonical representatives of inner orders on m points, by code.
const std::vector<Shape>& shapes(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Shape>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::map<std::uint64_t, Rel> found;
  natural_orders(m, [&](const Rel& r) {
    auto c = canonicalize(r);
    if (!found.contains(c.code)) found.emplace(c.code, relabel(r, c.ext));
  });
  std::vector<Shape> out;
  for (auto& [code, rel] : found) {
    Shape s{code, rel, {}};
    for_each_linear_extension(rel, [&](const std::vector<std::size_t>& ext) {
      if (code_along(rel, ext) == code) s.autos.push_back(ext);
    });
    out.push_back(std::move(s));
  }
  return cache.emplace(m, std::move(out)).first->second;
}

std::string hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join_elements(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += v[i] == kNone ? std::string("-") : std::to_string(v[i]);
  }
  return s;
}

// Bounded poset with bottom 0, inner points 1..m, top m+1.
FinitePoset bounded(const Rel& r, std::size_t n) {
  std::vector<Subset> above(n);
  if (n == 1) {
    above[0].insert(0);
    return FinitePoset::from_relation(std::move(above));
  }
  const std::size_t m = n - 2;
  for (Element x = 0; x < n; ++x) {
    above[x].insert(x);
    above[x].insert(static_cast<Element>(n - 1));
  }
  above[0] = Subset::first(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (rel_lt(r, a, b)) above[a + 1].insert(static_cast<Element>(b + 1));
  return FinitePoset::from_relation(std::move(above));
}

// Automorphism as a permutation of all n elements: perm[old] = new.
std::vector<Element> full_perm(const std::vector<std::size_t>& ext, std::size_t n) {
  std::vector<Element> perm(n);
  perm[0] = 0;
  if (n > 1) perm[n - 1] = static_cast<Element>(n - 1);
  for (std::size_t i = 0; i < ext.size(); ++i) perm[ext[i] + 1] = static_cast<Element>(i + 1);
  return perm;
}

// Involutions of p in lexicographic order. `antitone` restricts to
// order-reversing ones.
void involutions(const FinitePoset& p, bool antitone,
                 const std::function<void(const std::vector<Element>&)>& f) {
  const std::size_t n = p.size();
  std::vector<Element> inv(n, kNone);
  auto consistent = [&](Element x) {
    for (Element u = 0; u < n; ++u) {
      if (inv[u] == kNone) continue;
      if (p.leq(x, u) != p.leq(inv[u], inv[x])) return false;
      if (p.leq(u, x) != p.leq(inv[x], inv[u])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> void {
    while (x < n && inv[x] != kNone) ++x;
    if (x == n) {
      f(inv);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (inv[y] != kNone) continue;
      inv[x] = y;
      inv[y] = x;
      if (!antitone || (consistent(x) && consistent(y))) self(self, x + 1);
      inv[x] = kNone;
      inv[y] = kNone;
    }
  };
  rec(rec, 0);
}

std::vector<Element> conjugate(const std::vector<Element>& inv, const std::vector<Element>& perm) {
  std::vector<Element> out(inv.size());
  for (std::size_t x = 0; x < inv.size(); ++x) out[perm[x]] = perm[inv[x]];
  return out;
}

using Sections = std::vector<std::vector<Element>>;

Sections conjugate(const Sections& s, const std::vector<Element>& perm) {
  const std::size_t n = s.size();
  Sections out(n, std::vector<Element>(n, kNone));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s[x][y] != kNone) out[perm[x]][perm[y]] = perm[s[x][y]];
  return out;
}

template <class T>
bool is_min_under(const T& v, const std::vector<std::vector<Element>>& autos) {
  for (const auto& a : autos)
    if (conjugate(v, a) < v) return false;
  return true;
}

// Section rows available on each filter [x,1], in global indices.
std::vector<std::vector<std::vector<Element>>> section_choices(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::vector<Element>>> out(n);
  for (Element x = 0; x < n; ++x) {
    const Subset filter = p.up(x);
    std::vector<Element> members(filter.begin(), filter.end());
    const auto sub = induced(p, filter);
    involutions(sub, true, [&](const std::vector<Element>& inv) {
      std::vector<Element> row(n, kNone);
      for (std::size_t i = 0; i < members.size(); ++i) row[members[i]] = members[inv[i]];
      out[x].push_back(std::move(row));
    });
  }
  return out;
}

struct Generator {
  const EnumerationSpec& spec;
  const std::function<bool(const Instance&)>& sink;
  std::vector<Predicate> filters;
  std::size_t generated = 0;
  bool stopped = false;

  bool emit(Instance&& inst) {
    if (spec.budget && ++generated > spec.budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration cap of " + std::to_string(spec.budget) + " structures reached");
    for (const auto& f : filters)
      if (!f(inst)) return true;
    if (!sink(inst)) stopped = true;
    return !stopped;
  }

  // One order, all decorations required by the class.
  bool decorate(FinitePoset p, const std::string& code,
                const std::vector<std::vector<Element>>& autos) {
    const std::size_t n = p.size();
    switch (spec.cls) {
      case StructureClass::BoundedPoset:
        return emit({n, spec.cls, code, std::move(p), std::nullopt, std::nullopt});
      case StructureClass::Lattice:
        if (!is_lattice(p)) return true;
        return emit({n, spec.cls, code, std::move(p), std::nullopt, std::nullopt});
      case StructureClass::Ortho:
      case StructureClass::InvolutiveLattice: {
        const bool ortho = spec.cls == StructureClass::Ortho;
        if (!ortho && !is_lattice(p)) return true;
        std::vector<std::vector<Element>> found;
        involutions(p, ortho, [&](const std::vector<Element>& inv) {
          if (is_min_under(inv, autos)) found.push_back(inv);
        });
        for (auto& inv : found) {
          auto o = ortho ? OrthoPoset::make(p, inv) : OrthoPoset::make_involutive(p, inv);
          if (!emit({n, spec.cls, code + ":" + join_elements(inv), p, std::move(o), std::nullopt}))
            return false;
        }
        return true;
      }
      case StructureClass::Sectioned: {
        const auto choices = section_choices(p);
        std::vector<std::size_t> pick(n, 0);
        for (const auto& c : choices)
          if (c.empty()) return true;
        while (true) {
          Sections s(n);
          for (std::size_t x = 0; x < n; ++x) s[x] = choices[x][pick[x]];
          if (is_min_under(s, autos)) {
            std::string c = code + ":";
            for (std::size_t x = 0; x < n; ++x) c += (x ? "/" : "") + join_elements(s[x]);
            auto sp = validate_sections(p, s);
            auto bottom = sp.bottom_section();
            if (!emit({n, spec.cls, std::move(c), p, std::move(bottom), std::move(sp)})) return false;
          }
          std::size_t k = n;
          while (k > 0) {
            --k;
            if (++pick[k] < choices[k].size()) break;
            pick[k] = 0;
            if (k == 0) return true;
          }
        }
      }
    }
    return true;
  }

  void run() {
    for (std::size_t n = std::max<std::size_t>(spec.min_n, 1); n <= spec.max_n && !stopped; ++n) {
      const std::string prefix = "n" + std::to_string(n) + ":";
      if (n == 1) {
        if (!decorate(bounded({}, 1), prefix + "0", {})) return;
        continue;
      }
      const std::size_t m = n - 2;
      for (const auto& shape : shapes(m)) {
        if (spec.up_to_iso) {
          std::vector<std::vector<Element>> autos;
          for (const auto& e : shape.autos) autos.push_back(full_perm(e, n));
          if (!decorate(bounded(shape.rel, n), prefix + hex(shape.code), autos)) return;
          continue;
        }
        // Every distinct labelling of this shape.
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<Rel> seen;
        do {
          Rel r(m, 0);
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
              if (rel_lt(shape.rel, a, b)) r[perm[b]] |= 1U << perm[a];
          seen.insert(std::move(r));
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& r : seen) {
          std::uint64_t full = 0;
          for (std::size_t k = 0; k < m; ++k) full = full << m | r[k];
          const std::vector<std::vector<Element>> none{};
          if (!decorate(bounded(r, n), prefix + hex(shape.code) + "/" + hex(full), none)) return;
        }
      }
    }
  }
};

Rel inner_relation(const FinitePoset& p, std::vector<Element>& inner) {
  inner.clear();
  for (Element x = 0; x < p.size(); ++x)
    if (x != p.bottom() && x != p.top()) inner.push_back(x);
  Rel r(inner.size(), 0);
  for (std::size_t a = 0; a < inner.size(); ++a)
    for (std::size_t b = 0; b < inner.size(); ++b)
      if (p.lt(inner[a], inner[b])) r[b] |= 1U << a;
  return r;
}

constexpr std::size_t kMaxCanonicalInner = 10;

}  // namespace

void validate(const EnumerationSpec& spec) {
  if (spec.max_n < 2) throw Error(ErrorKind::PreconditionUnmet, "max_n must be at least 2");
  if (spec.max_n > kMaxEnumerationSize)
    throw Error(ErrorKind::PreconditionUnmet,
                "max_n above " + std::to_string(kMaxEnumerationSize) + " is out of reach");
  if (spec.min_n > spec.max_n) throw Error(ErrorKind::PreconditionUnmet, "min_n exceeds max_n");
  for (const auto& f : spec.filters) (void)find_predicate(f);
}

void enumerate(const EnumerationSpec& spec, const std::function<bool(const Instance&)>& sink) {
  validate(spec);
  Generator g{spec, sink, {}};
  for (const auto& f : spec.filters) g.filters.push_back(find_predicate(f));
  g.run();
}

std::vector<Instance> enumerate_all(const EnumerationSpec& spec) {
  std::vector<Instance> out;
  enumerate(spec, [&](const Instance& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

namespace {

struct PosetCanon {
  std::string code;
  std::vector<Element> perm;                // old index -> canonical index
  std::vector<std::vector<Element>> autos;  // of the canonical labelling
};

PosetCanon poset_canon(const FinitePoset& p) {
  std::vector<Element> inner;
  const Rel r = inner_relation(p, inner);
  const std::size_t n = p.size();
  if (inner.size() > kMaxCanonicalInner)
    throw Error(ErrorKind::TooManyElements, "canonical form limited to " +
                                                std::to_string(kMaxCanonicalInner + 2) + " elements");
  PosetCanon out;
  out.code = "n" + std::to_string(n) + ":";
  out.perm.assign(n, 0);
  if (n == 1) {
    out.code += "0";
    return out;
  }
  const auto c = canonicalize(r);
  out.code += hex(c.code);
  out.perm[p.bottom()] = 0;
  out.perm[p.top()] = static_cast<Element>(n - 1);
  for (std::size_t i = 0; i < c.ext.size(); ++i) out.perm[inner[c.ext[i]]] = static_cast<Element>(i + 1);
  const Rel canon = relabel(r, c.ext);
  for_each_linear_extension(canon, [&](const std::vector<std::size_t>& ext) {
    if (code_along(canon, ext) == c.code) out.autos.push_back(full_perm(ext, n));
  });
  return out;
}

}  // namespace

std::string canonical_code(const FinitePoset& p) { return poset_canon(p).code; }

std::string canonical_code(const OrthoPoset& o) {
  const auto c = poset_canon(o.poset());
  const auto base = conjugate(o.involution(), c.perm);
  auto best = base;
  for (const auto& a : c.autos) best = std::min(best, conjugate(base, a));
  return c.code + ":" + join_elements(best);
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
Predicate on_ortho(F f) {
  return [f](const Instance& i) { return i.ortho && f(*i.ortho); };
}

const std::vector<std::pair<std::string, Predicate>>& registry() {
  static const std::vector<std::pair<std::string, Predicate>> r = {
      {"lattice", [](const Instance& i) { return is_lattice(i.poset); }},
      {"join-semilattice", [](const Instance& i) { return is_join_semilattice(i.poset); }},
      {"distributive", [](const Instance& i) { return is_distributive_poset(i.poset); }},
      {"maximality", [](const Instance& i) { return has_maximality(i.poset); }},
      {"involutive", [](const Instance& i) { return i.ortho.has_value(); }},
      {"antitone", on_ortho([](const OrthoPoset& o) { return o.antitone(); })},
      {"orthogonal",
       on_ortho([](const OrthoPoset& o) { return o.antitone() && is_orthogonal_poset(o).holds; })},
      {"paraorthomodular",
       on_ortho([](const OrthoPoset& o) { return o.antitone() && is_paraorthomodular(o).holds; })},
      {"sharply-paraorthomodular", on_ortho([](const OrthoPoset& o) {
         return o.antitone() && is_sharply_paraorthomodular(o).holds;
       })},
      {"regular", on_ortho([](const OrthoPoset& o) {
         try {
           return is_regular(o).holds;
         } catch (const Error&) {
           return false;
         }
       })},
      {"complementation", on_ortho([](const OrthoPoset& o) { return is_complementation(o).holds; })},
      {"orthomodular",
       on_ortho([](const OrthoPoset& o) { return o.antitone() && is_orthomodular(o).holds; })},
      {"weakly-boolean", on_ortho([](const OrthoPoset& o) { return is_weakly_boolean(o).holds; })},
      {"boolean-poset", on_ortho([](const OrthoPoset& o) { return is_boolean_poset(o); })},
      {"boolean-algebra", on_ortho([](const OrthoPoset& o) { return is_boolean_algebra(o); })},
      {"kleene", on_ortho([](const OrthoPoset& o) { return is_kleene_lattice(o); })},
      {"relatively-paraorthomodular",
       [](const Instance& i) {
         return i.sectioned && is_relatively_paraorthomodular(*i.sectioned).holds;
       }},
      {"compatible",
       [](const Instance& i) {
         if (!i.sectioned) return false;
         try {
           return check_C(*i.sectioned).holds;
         } catch (const Error&) {
           return false;
         }
       }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Predicate find_predicate(std::string_view name) {
  const bool negate = !name.empty() && name.front() == '!';
  if (negate) name.remove_prefix(1);
  for (const auto& [n, f] : registry())
    if (n == name) {
      if (!negate) return f;
      return [f](const Instance& i) { return !f(i); };
    }
  throw Error(ErrorKind::UnknownName, "unknown predicate '" + std::string(name) + "'");
}

bool eval_predicate(std::string_view name, const Instance& inst) { return find_predicate(name)(inst); }

Instance make_instance(const OrthoPoset& o) {
  std::string code;
  try {
    code = canonical_code(o);
  } catch (const Error&) {
    code = "n" + std::to_string(o.size()) + ":?";
  }
  return {o.size(), StructureClass::Ortho, std::move(code), o.poset(), o, std::nullopt};
}

Instance make_instance(const SectionedPoset& s) {
  std::string code;
  try {
    code = canonical_code(s.poset());
  } catch (const Error&) {
    code = "n" + std::to_string(s.size()) + ":?";
  }
  return {s.size(), StructureClass::Sectioned, std::move(code), s.poset(), s.bottom_section(), s};
}

std::optional<Instance> find_counterexample(std::string_view a, std::string_view b,
                                            const EnumerationSpec& spec) {
  auto s = spec;
  s.filters.emplace_back(a);
  s.filters.push_back("!" + std::string(b));
  std::optional<Instance> out;
  enumerate(s, [&](const Instance& i) {
    out = i;
    return false;
  });
  return out;
}

}  // namespace qposet
