#include "qposet/ortho.hpp"

#include "qposet/error.hpp"

namespace qposet {

namespace {

void check_map(const FinitePoset& p, const std::vector<Element>& inv) {
  if (inv.size() != p.size())
    throw Error(ErrorKind::IndexOutOfRange, "involution must be defined on every element");
  for (Element x = 0; x < inv.size(); ++x) p.check(inv[x]);
  for (Element x = 0; x < inv.size(); ++x)
    if (inv[inv[x]] != x)
      throw Error(ErrorKind::InvolutionViolation, p.label(x) + "'' != " + p.label(x), {x});
}

}  // namespace

OrthoPoset OrthoPoset::make(FinitePoset p, std::vector<Element> inv) {
  check_map(p, inv);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      if (!p.leq(inv[y], inv[x]))
        throw Error(ErrorKind::AntitoneViolation,
                    p.label(x) + " <= " + p.label(y) + " but " + p.label(inv[y]) + " !<= " +
                        p.label(inv[x]),
                    {x, y});
  return OrthoPoset(std::move(p), std::move(inv), true);
}

OrthoPoset OrthoPoset::make_involutive(FinitePoset p, std::vector<Element> inv) {
  check_map(p, inv);
  bool anti = true;
  for (Element x = 0; x < p.size() && anti; ++x)
    for (Element y : p.up(x))
      if (!p.leq(inv[y], inv[x])) {
        anti = false;
        break;
      }
  return OrthoPoset(std::move(p), std::move(inv), anti);
}

OrthoPoset validate_involution(FinitePoset p, std::vector<Element> inv) {
  return OrthoPoset::make(std::move(p), std::move(inv));
}

Verdict is_orthogonal_poset(const OrthoPoset& o) {
  const auto& p = o.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.down(o(x)))
      if (!join(p, x, y)) return Verdict::fail({x, y}, "orthogonal pair without a join");
  return Verdict::pass();
}

Verdict is_paraorthomodular(const OrthoPoset& o) {
  const auto& p = o.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      if (y != x && meet_is_bottom(p, o(x), y)) return Verdict::fail({x, y});
  return Verdict::pass();
}

Verdict is_sharply_paraorthomodular(const OrthoPoset& o) {
  if (auto v = is_orthogonal_poset(o); !v) return v;
  return is_paraorthomodular(o);
}

Verdict is_regular(const OrthoPoset& o) {
  const auto& p = o.poset();
  std::vector<std::optional<Element>> m(p.size()), j(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    m[x] = meet(p, x, o(x));
    j[x] = join(p, x, o(x));
  }
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!m[x] || !j[y])
        throw Error(ErrorKind::UndefinedTerm,
                    "x ∧ x' or y ∨ y' does not exist for x=" + p.label(x) + ", y=" + p.label(y),
                    {x, y});
      if (!p.leq(*m[x], *j[y])) return Verdict::fail({x, y});
    }
  return Verdict::pass();
}

Verdict is_complementation(const OrthoPoset& o) {
  const auto& p = o.poset();
  for (Element x = 0; x < p.size(); ++x)
    if (lower_cone(p, x, o(x)) != Subset::singleton(p.bottom()) ||
        upper_cone(p, x, o(x)) != Subset::singleton(p.top()))
      return Verdict::fail({x});
  return Verdict::pass();
}

Verdict is_orthomodular(const OrthoPoset& o) {
  if (auto v = is_orthogonal_poset(o); !v) {
    v.note = "not orthogonal";
    return v;
  }
  const auto& p = o.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x)) {
      auto m = meet(p, y, o(x));
      if (!m) return Verdict::fail({x, y}, "y ∧ x' does not exist");
      auto j = join(p, x, *m);
      if (!j || *j != y) return Verdict::fail({x, y}, "x ∨ (y ∧ x') != y");
    }
  if (auto v = is_complementation(o); !v) {
    v.note = "not a complementation";
    return v;
  }
  return Verdict::pass();
}

OrthomodularVariants orthomodular_variants(const OrthoPoset& o) {
  const auto& p = o.poset();
  OrthomodularVariants out;
  out.om = true;
  for (Element x = 0; x < p.size() && out.om; ++x)
    for (Element y : p.up(x)) {
      auto m = meet(p, y, o(x));
      auto j = m ? join(p, x, *m) : std::nullopt;
      if (!j || *j != y) {
        out.om = false;
        break;
      }
    }

  out.om_u = out.om_ue = true;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      const Subset mu = min_upper(p, x, y);
      Subset lhs;
      bool defined = true;
      for (Element z : mu) {
        auto m = meet(p, z, o(x));
        auto j = m ? join(p, x, *m) : std::nullopt;
        if (!j) {
          defined = false;
          break;
        }
        lhs.insert(*j);
      }
      if (!defined) {
        out.om_u = out.om_ue = false;
        return out;
      }
      if (lhs != mu) out.om_u = false;
      if (!subset_rel(p, lhs, mu, SubsetRelation::Approx2)) out.om_ue = false;
    }
  return out;
}

Verdict is_weakly_boolean(const OrthoPoset& o) {
  const auto& p = o.poset();
  for (Element a = 0; a < p.size(); ++a) {
    if (a == p.bottom()) continue;
    for (Element b = 0; b < p.size(); ++b)
      if (meet_is_bottom(p, a, b) && meet_is_bottom(p, a, o(b))) return Verdict::fail({a, b});
  }
  return Verdict::pass();
}

bool is_boolean_poset(const OrthoPoset& o) {
  return is_distributive_poset(o.poset()) && is_complementation(o).holds;
}

bool is_boolean_algebra(const OrthoPoset& o) {
  return is_lattice(o.poset()) && is_boolean_poset(o);
}

bool is_kleene_lattice(const OrthoPoset& o) {
  const auto& p = o.poset();
  if (!is_lattice(p) || !is_distributive_poset(p)) return false;
  return is_regular(o).holds && is_paraorthomodular(o).holds;
}

std::optional<ElementPair> find_benzene(const OrthoPoset& o) {
  const auto& p = o.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x)) {
      if (y == x || !meet_is_bottom(p, o(x), y)) continue;
      const Element xp = o(x), yp = o(y);
      const Subset six{p.bottom(), x, y, yp, xp, p.top()};
      if (six.size() != 6) continue;
      // The hexagon: 0 < x < y < 1 and 0 < y' < x' < 1, nothing else.
      const Element mid[4] = {x, y, yp, xp};
      bool ok = true;
      for (Element u : mid)
        for (Element v : mid) {
          const bool expected = u == v || (u == x && v == y) || (u == yp && v == xp);
          if (p.leq(u, v) != expected) ok = false;
        }
      if (ok) return ElementPair{x, y};
    }
  return std::nullopt;
}

}  // namespace qposet
