#pragma once

#include "qposet/error.hpp"
#include "qposet/ortho.hpp"

namespace qposet {

inline void require_orthogonal(const OrthoPoset& o) {
  if (auto v = is_orthogonal_poset(o); !v)
    throw Error(ErrorKind::NotOrthogonal,
                o.poset().label(v.witness[0]) + " ⊥ " + o.poset().label(v.witness[1]) +
                    " but their join does not exist",
                v.witness);
}

inline void require_lattice(const FinitePoset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y) || !meet(p, x, y))
        throw Error(ErrorKind::NotALattice,
                    p.label(x) + " and " + p.label(y) + " lack a meet or a join", {x, y});
}

}  // namespace qposet
