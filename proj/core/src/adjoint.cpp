#include "qposet/adjoint.hpp"

#include "qposet/error.hpp"
#include "require.hpp"

namespace qposet {

AdjointnessReport check_conditions(const OrthoPoset& o, const SetValuedTable& prod,
                                   const SetValuedTable& imp) {
  const auto& p = o.poset();
  const std::size_t n = p.size();
  AdjointnessReport r;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Subset& pc = prod(x, y);
      for (Element z = 0; z < n; ++z) {
        const Subset& ic = imp(y, z);
        const bool p_all = pc.is_subset_of(p.down(z));
        const bool p_some = pc.intersects(p.down(z));
        const bool i_all = ic.is_subset_of(p.up(x));
        const bool i_some = ic.intersects(p.up(x));
        if (r.a.holds && p_all && !i_all) r.a = Verdict::fail({x, y, z});
        if (r.b.holds && i_all && !p_all) r.b = Verdict::fail({x, y, z});
        if (r.a21.holds && p_some && !i_some) r.a21 = Verdict::fail({x, y, z});
        if (r.b12.holds && i_some && !p_some) r.b12 = Verdict::fail({x, y, z});
      }
    }
  return r;
}

bool lemma_AB_equiv(const OrthoPoset& o) {
  const auto r = check_conditions(o, sasaki_proj(o), sasaki_impl(o));
  return r.a.holds == r.b.holds && r.a21.holds == r.b12.holds;
}

Equivalence omidentity_equiv(const OrthoPoset& o) {
  const auto& p = o.poset();
  require_lattice(p);
  Equivalence e;
  e.left = true;
  for (Element a = 0; a < p.size() && e.left; ++a)
    for (Element b = 0; b < p.size(); ++b) {
      const Element ab = *join(p, a, b);
      const Element mab = *meet(p, a, b);
      const bool oi_join = ab == *join(p, b, *meet(p, o(b), ab));
      const bool oi_meet = mab == *meet(p, a, *join(p, o(a), mab));
      if (!oi_join || !oi_meet) {
        e.left = false;
        break;
      }
    }
  e.right = check_conditions(o, sasaki_proj(o), sasaki_impl(o)).full();
  return e;
}

Equivalence sasom_equiv(const OrthoPoset& o) {
  require_orthogonal(o);
  Equivalence e;
  e.left = is_orthomodular(o).holds;
  e.right = check_conditions(o, sasaki_proj(o), sasaki_impl(o)).weak();
  return e;
}

CheckReport th3_check(const OrthoPoset& o) {
  if (!is_orthogonal_poset(o)) return CheckReport::skipped("not an orthogonal poset");
  const auto r = check_conditions(o, sasaki_proj(o), impl_I(o));
  const bool om = is_orthomodular(o).holds;
  CheckReport out;
  if (is_lattice(o.poset()) && r.a.holds && !om) out.add("th3", {});
  if (r.a21.holds && !om) out.add("posth3", {});
  return out;
}

Residuation try_residuate(const OrthoPoset& o, const SetValuedTable& imp) {
  const auto& p = o.poset();
  const std::size_t n = p.size();
  Residuation res;
  ElementTable prod(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Subset zs;
      for (Element z = 0; z < n; ++z)
        if (imp(y, z).is_subset_of(p.up(x))) zs.insert(z);
      std::optional<Element> least;
      for (Element z : zs)
        if (zs.is_subset_of(p.up(z))) least = z;
      if (!least) {
        res.no_least = ElementPair{x, y};
        return res;
      }
      prod(x, y) = *least;
    }
  res.report = check_conditions(o, prod.as_sets(), imp);
  res.product = std::move(prod);
  return res;
}

Residuation residuate(const OrthoPoset& o, const SetValuedTable& imp) {
  auto r = try_residuate(o, imp);
  if (r.no_least) {
    const auto [x, y] = *r.no_least;
    throw Error(ErrorKind::NoLeastElement,
                "no least z with " + o.poset().label(x) + " <= " + o.poset().label(y) + " -> z",
                {x, y});
  }
  return r;
}

CheckReport adji_consequences(const OrthoPoset& o) {
  require_orthogonal(o);
  const auto res = try_residuate(o, impl_I(o));
  if (!res.adjoint())
    throw Error(ErrorKind::PreconditionUnmet, "no product is adjoint to ->_I on this structure");
  const auto& p = o.poset();
  const auto& prod = *res.product;
  CheckReport r;
  for (Element x = 0; x < p.size(); ++x) {
    if (prod(x, o(x)) != p.bottom()) r.add("i", {x});
    for (Element y = 0; y < p.size(); ++y) {
      const Element v = prod(x, y);
      if (!subset_rel(p, Subset::singleton(v), max_lower(p, x, y), SubsetRelation::Leq1) ||
          !p.leq(v, x) || !p.leq(v, y))
        r.add("iii", {x, y});
    }
  }
  if (auto v = is_orthomodular(o); !v) r.add("ii", v.witness);
  if (auto v = is_weakly_boolean(o); !v) r.add("iv", v.witness);
  return r;
}

Equivalence adjebp_equiv(const OrthoPoset& o) {
  require_orthogonal(o);
  Equivalence e;
  e.left = try_residuate(o, impl_I(o)).adjoint();
  e.right = is_boolean_algebra(o);
  return e;
}

bool adjibp_check(const OrthoPoset& o) {
  if (!is_orthogonal_poset(o) || !is_boolean_poset(o) || !has_maximality(o.poset())) return true;
  return is_boolean_algebra(o);
}

}  // namespace qposet
