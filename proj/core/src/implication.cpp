#include "qposet/implication.hpp"

#include "qposet/error.hpp"
#include "require.hpp"

namespace qposet {

SetValuedTable impl_I(const OrthoPoset& o) {
  require_orthogonal(o);
  const auto& p = o.poset();
  SetValuedTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) t(x, y) = join_each(p, y, max_lower(p, o(x), o(y)));
  return t;
}

ElementTable impl_I2(const OrthoPoset& o) {
  require_lattice(o.poset());
  const auto& p = o.poset();
  ElementTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) t(x, y) = *join(p, y, *meet(p, o(x), o(y)));
  return t;
}

SetValuedTable sasaki_proj(const OrthoPoset& o) {
  require_orthogonal(o);
  const auto& p = o.poset();
  SetValuedTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) t(x, y) = meet_each(p, y, min_upper(p, x, o(y)));
  return t;
}

SetValuedTable sasaki_impl(const OrthoPoset& o) {
  require_orthogonal(o);
  const auto& p = o.poset();
  SetValuedTable t(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) t(x, y) = join_each(p, o(x), max_lower(p, x, y));
  return t;
}

bool duality_check(const OrthoPoset& o) {
  const auto ti = impl_I(o);
  const auto ts = sasaki_impl(o);
  for (Element x = 0; x < o.size(); ++x)
    for (Element y = 0; y < o.size(); ++y)
      if (ti(x, y) != ts(o(y), o(x))) return false;
  return true;
}

namespace {

// {y ∨ (y' ∧ w) | w ∈ ws}; nullopt if some term is missing.
std::optional<Subset> join_meet_each(const OrthoPoset& o, Element y, const Subset& ws) {
  const auto& p = o.poset();
  Subset out;
  for (Element w : ws) {
    auto m = meet(p, o(y), w);
    auto j = m ? join(p, y, *m) : std::nullopt;
    if (!j) return std::nullopt;
    out.insert(*j);
  }
  return out;
}

}  // namespace

CheckReport check_th1(const OrthoPoset& o) {
  const auto& p = o.poset();
  if (!is_orthogonal_poset(o)) return CheckReport::skipped("not an orthogonal poset");
  const auto t = impl_I(o);
  const bool complemented = is_complementation(o).holds;
  const std::size_t n = p.size();
  CheckReport r;

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Subset& cell = t(x, y);
      const Subset ys = Subset::singleton(y);
      if (!subset_rel(p, ys, cell, SubsetRelation::Leq)) r.add("i", {x, y});

      if (p.leq(x, y)) {
        for (Element z = 0; z < n; ++z)
          if (!subset_rel(p, t(y, z), t(x, z), SubsetRelation::Leq1)) r.add("ii", {x, y, z});
        auto j = join(p, y, o(y));
        if (!j || cell != Subset::singleton(*j)) r.add("iii-leq", {x, y});
        if (complemented && cell != Subset::singleton(p.top())) r.add("iii'", {x, y});
      }
      if (orthogonal(o, x, y)) {
        if (auto m = meet(p, o(x), o(y))) {
          auto j = join(p, y, *m);
          if (!j || cell != Subset::singleton(*j)) r.add("iii-perp", {x, y});
        }
      }
      if (p.leq(y, x)) {
        auto j = join(p, o(x), y);
        if (!j || cell != Subset::singleton(*j)) r.add("iii-geq", {x, y});
      }

      // (x -> y) -> y against y ∨ (y' ∧ Min U(x,y)).
      const Subset twice = lift_table(t, cell, ys);
      auto rhs4 = join_meet_each(o, y, min_upper(p, x, y));
      if (!rhs4) {
        r.add("iv", {x, y}, "undefined term");
      } else {
        if (twice != *rhs4) r.add("iv", {x, y});
        if (!subset_rel(p, twice, *rhs4, SubsetRelation::Approx2)) r.add("iv~2", {x, y});
      }

      // ((x -> y) -> y) -> y against y ∨ (y' ∧ (y ∨ Max L(x',y'))).
      const Subset thrice = lift_table(t, twice, ys);
      std::optional<Subset> rhs5;
      try {
        rhs5 = join_meet_each(o, y, join_each(p, y, max_lower(p, o(x), o(y))));
      } catch (const Error&) {
        rhs5.reset();
      }
      if (!rhs5) {
        r.add("v", {x, y}, "undefined term");
      } else {
        if (thrice != *rhs5) r.add("v", {x, y});
        if (!subset_rel(p, thrice, *rhs5, SubsetRelation::Approx2)) r.add("v~2", {x, y});
      }
    }
  return r;
}

CheckReport check_lemma_sharply(const OrthoPoset& o) {
  if (!is_sharply_paraorthomodular(o)) return CheckReport::skipped("not sharply paraorthomodular");
  const auto& p = o.poset();
  const auto t = impl_I(o);
  CheckReport r;
  for (Element b = 0; b < p.size(); ++b)
    if (t(o(b), b) != Subset::singleton(b)) r.add("i", {b});
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b) {
      if (orthogonal(o, a, b) && meet_is_bottom(p, b, o(b))) {
        const bool lhs = t(a, b) == Subset::singleton(b);
        if (lhs != (a == o(b))) r.add("ii", {a, b});
      }
      if (t(a, b) == Subset::singleton(p.top()) && !p.leq(a, b)) r.add("iii", {a, b});
    }
  return r;
}

Equivalence paraortho_iff_impl(const OrthoPoset& o) {
  const auto& p = o.poset();
  const auto t = impl_I(o);
  Equivalence e;
  e.left = is_paraorthomodular(o).holds;
  e.right = true;
  for (Element x = 0; x < p.size() && e.right; ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (t(x, y) == Subset::singleton(p.top()) && !p.leq(x, y)) {
        e.right = false;
        break;
      }
  return e;
}

bool antitone_first_arg_I2(const OrthoPoset& o) {
  const auto& p = o.poset();
  const auto t = impl_I2(o);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      for (Element z = 0; z < p.size(); ++z)
        if (!p.leq(t(y, z), t(x, z))) return false;
  return true;
}

}  // namespace qposet
