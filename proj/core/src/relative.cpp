#include "qposet/relative.hpp"

#include "qposet/error.hpp"
#include "require.hpp"

namespace qposet {

namespace {

[[noreturn]] void section_error(const FinitePoset& p, Element x, Element y, const std::string& what) {
  throw Error(ErrorKind::SectionViolation,
              "section [" + p.label(x) + ",1] at " + p.label(y) + ": " + what, {x, y});
}

}  // namespace

OrthoPoset SectionedPoset::bottom_section() const {
  return OrthoPoset::make(poset_, sections_[poset_.bottom()]);
}

SectionedPoset validate_sections(FinitePoset p, std::vector<std::vector<Element>> sections) {
  const std::size_t n = p.size();
  if (sections.size() != n) throw Error(ErrorKind::SectionViolation, "one section per element required");
  for (Element x = 0; x < n; ++x) {
    auto& s = sections[x];
    if (s.size() != n) section_error(p, x, x, "row has the wrong length");
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(x, y)) {
        if (s[y] != kNone) section_error(p, x, y, "defined outside the filter");
        continue;
      }
      if (s[y] == kNone) section_error(p, x, y, "undefined inside the filter");
      if (s[y] >= n || !p.leq(x, s[y])) section_error(p, x, y, "image leaves the filter");
    }
    for (Element y : p.up(x)) {
      if (s[s[y]] != y) section_error(p, x, y, "not an involution");
      for (Element z : p.up(y))
        if (!p.leq(s[z], s[y])) section_error(p, x, y, "not antitone");
    }
    // Forced by the two properties above; kept as a sanity check.
    if (s[x] != p.top() || s[p.top()] != x) section_error(p, x, x, "bottom and top not swapped");
  }
  return SectionedPoset(std::move(p), std::move(sections));
}

std::vector<std::vector<Element>> complete_sections(const FinitePoset& p,
                                                    std::vector<std::vector<Element>> partial,
                                                    const std::vector<Element>* global) {
  const std::size_t n = p.size();
  partial.resize(n);
  for (Element x = 0; x < n; ++x) {
    auto& row = partial[x];
    row.resize(n, kNone);
    bool empty = true;
    for (Element v : row)
      if (v != kNone) empty = false;
    if (!empty) continue;
    const Subset f = p.up(x);
    if (f.size() == 1) {
      row[x] = x;
    } else if (f.size() == 2) {
      row[x] = p.top();
      row[p.top()] = x;
    } else if (x == p.bottom() && global) {
      row = *global;
    } else {
      section_error(p, x, x, "no involution given for a filter with more than two elements");
    }
  }
  return partial;
}

Verdict is_relatively_paraorthomodular(const SectionedPoset& s) {
  const auto& p = s.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      for (Element z : p.up(y)) {
        if (z == y) continue;
        // Lower cone of {y^x, z} relative to [x,1].
        if ((p.up(x) & lower_cone(p, s.at(x, y), z)) == Subset::singleton(x))
          return Verdict::fail({x, y, z});
      }
  return Verdict::pass();
}

Verdict check_C(const SectionedPoset& s) {
  const auto& p = s.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      for (Element z : p.up(y)) {
        auto j = join(p, s.at(x, z), y);
        if (!j)
          throw Error(ErrorKind::JoinMissing,
                      p.label(s.at(x, z)) + " ∨ " + p.label(y) + " does not exist", {x, y, z});
        if (s.at(y, z) != *j) return Verdict::fail({x, y, z});
      }
  return Verdict::pass();
}

SetValuedTable impl_I3(const SectionedPoset& s) {
  const auto& p = s.poset();
  SetValuedTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      for (Element w : min_upper(p, x, y)) t(x, y).insert(s.at(y, w));
  return t;
}

ElementTable impl_I4(const SectionedPoset& s) {
  const auto& p = s.poset();
  ElementTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      auto j = join(p, x, y);
      if (!j)
        throw Error(ErrorKind::NotJoinSemilattice,
                    p.label(x) + " ∨ " + p.label(y) + " does not exist", {x, y});
      t(x, y) = s.at(y, *j);
    }
  return t;
}

CheckReport check_th2(const SectionedPoset& s) {
  if (!is_relatively_paraorthomodular(s)) return CheckReport::skipped("(RP) fails");
  const auto& p = s.poset();
  const auto t = impl_I3(s);
  const Subset one = Subset::singleton(p.top());
  CheckReport r;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      const Subset& cell = t(x, y);
      const Subset ys = Subset::singleton(y);
      if (!subset_rel(p, ys, cell, SubsetRelation::Leq)) r.add("i", {x, y});
      if (p.leq(x, y) != (cell == one)) r.add("ii", {x, y});
      if (p.leq(x, y) && cell != one) r.add("iii-leq", {x, y});
      if (auto j = join(p, x, y); j && cell != Subset::singleton(s.at(y, *j))) r.add("iii-join", {x, y});
      if (p.leq(y, x) && cell != Subset::singleton(s.at(y, x))) r.add("iii-geq", {x, y});

      const Subset twice = lift_table(t, cell, ys);
      const Subset mu = min_upper(p, x, y);
      if (twice != mu) r.add("iv", {x, y});
      if (!subset_rel(p, twice, mu, SubsetRelation::Approx2)) r.add("iv~2", {x, y});
      const Subset thrice = lift_table(t, twice, ys);
      if (thrice != cell) r.add("v", {x, y});
      if (!subset_rel(p, thrice, cell, SubsetRelation::Approx2)) r.add("v~2", {x, y});
    }
  return r;
}

Equivalence para_via_I3(const SectionedPoset& s) {
  const auto& p = s.poset();
  const auto t = impl_I3(s);
  const auto& s0 = s.section(p.bottom());
  Equivalence e;
  e.left = is_paraorthomodular(s.bottom_section()).holds;
  e.right = true;
  for (Element x = 0; x < p.size() && e.right; ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, s0[y]) && t(x, y) == Subset::singleton(y) && x != s0[y]) {
        e.right = false;
        break;
      }
  return e;
}

Equivalence relpara_via_impl_under_C(const SectionedPoset& s) {
  bool compatible = false;
  try {
    compatible = check_C(s).holds;
  } catch (const Error&) {
    compatible = false;
  }
  if (!compatible) throw Error(ErrorKind::CompatibilityFailed, "sections do not satisfy (C)");
  const auto& p = s.poset();
  const auto t = impl_I3(s);
  Equivalence e;
  e.left = is_relatively_paraorthomodular(s).holds;
  e.right = true;
  for (Element x = 0; x < p.size() && e.right; ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (t(x, y) == Subset::singleton(p.top()) && !p.leq(x, y)) {
        e.right = false;
        break;
      }
  return e;
}

bool antitone_first_arg_I4(const SectionedPoset& s) {
  const auto& p = s.poset();
  const auto t = impl_I4(s);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      for (Element z = 0; z < p.size(); ++z)
        if (!p.leq(t(y, z), t(x, z))) return false;
  return true;
}

SectionedPoset relative_orthocomplement_sections(const OrthoPoset& o) {
  const auto& p = o.poset();
  require_lattice(p);
  std::vector<std::vector<Element>> rows(p.size(), std::vector<Element>(p.size(), kNone));
  for (Element x = 0; x < p.size(); ++x)
    for (Element z : p.up(x)) rows[x][z] = *join(p, o(z), x);
  return validate_sections(p, std::move(rows));
}

}  // namespace qposet
