#include "qposet/amalgam.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qposet/error.hpp"

namespace qposet {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_atom(const FinitePoset& p, Element x) {
  return x != p.bottom() && strictly_between(p, p.bottom(), x).empty();
}
bool is_coatom(const FinitePoset& p, Element x) {
  return x != p.top() && strictly_between(p, x, p.top()).empty();
}

}  // namespace

std::optional<Element> PastedFamily::local(std::size_t i, Element c) const {
  const auto& ids = ids_[i];
  for (Element e = 0; e < ids.size(); ++e)
    if (ids[e] == c) return e;
  return std::nullopt;
}

PastedFamily validate_family(std::vector<Block> blocks, std::vector<Glue> glue) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidGlue, "a family needs at least one block");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.lattice.size() < 6)
      throw Error(ErrorKind::BlockTooSmall,
                  "block " + b.name + " has " + std::to_string(b.lattice.size()) +
                      " elements, at least 6 required",
                  {static_cast<Element>(i)});
    if (!is_kleene_lattice(b.lattice))
      throw Error(ErrorKind::NotKleene, "block " + b.name + " is not a Kleene lattice",
                  {static_cast<Element>(i)});
  }

  std::vector<std::size_t> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) offset[i + 1] = offset[i] + blocks[i].lattice.size();
  UnionFind uf(offset.back());
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    uf.unite(offset[0] + blocks[0].lattice.poset().bottom(), offset[i] + blocks[i].lattice.poset().bottom());
    uf.unite(offset[0] + blocks[0].lattice.poset().top(), offset[i] + blocks[i].lattice.poset().top());
  }
  for (const auto& g : glue) {
    if (g.block_a >= blocks.size() || g.block_b >= blocks.size() ||
        g.a >= blocks[g.block_a].lattice.size() || g.b >= blocks[g.block_b].lattice.size())
      throw Error(ErrorKind::InvalidGlue, "identification refers to a missing block or element");
    if (g.block_a == g.block_b && g.a != g.b)
      throw Error(ErrorKind::InvalidGlue, "identification inside block " + blocks[g.block_a].name,
                  {g.a, g.b});
    uf.unite(offset[g.block_a] + g.a, offset[g.block_b] + g.b);
  }

  PastedFamily f;
  std::vector<Element> class_id(offset.back(), kMaxElements);
  std::unordered_set<std::string> used;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& p = blocks[i].lattice.poset();
    std::vector<Element> ids(p.size());
    Subset mem;
    for (Element e = 0; e < p.size(); ++e) {
      const std::size_t root = uf.find(offset[i] + e);
      if (class_id[root] == kMaxElements) {
        if (f.labels_.size() == kMaxElements)
          throw Error(ErrorKind::TooManyElements, "glued union exceeds the element capacity");
        class_id[root] = static_cast<Element>(f.labels_.size());
        std::string label = p.label(e);
        if (!used.insert(label).second) {
          label = blocks[i].name + "." + p.label(e);
          used.insert(label);
        }
        f.labels_.push_back(label);
      }
      ids[e] = class_id[root];
      if (mem.contains(ids[e]))
        throw Error(ErrorKind::InvalidGlue,
                    "block " + blocks[i].name + " would contain " + p.label(e) +
                        " twice after gluing",
                    {static_cast<Element>(i), e});
      mem.insert(ids[e]);
    }
    f.ids_.push_back(std::move(ids));
    f.members_.push_back(mem);
  }
  f.bottom_ = f.ids_[0][blocks[0].lattice.poset().bottom()];
  f.top_ = f.ids_[0][blocks[0].lattice.poset().top()];
  f.blocks_ = std::move(blocks);

  const auto& bl = f.blocks_;
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j) {
      const Subset s = f.shared(i, j);
      const std::vector<Element> ij{static_cast<Element>(i), static_cast<Element>(j)};
      const std::string pair = bl[i].name + " and " + bl[j].name;
      if (s.size() == 2) continue;
      if (s.size() == 3)
        throw Error(ErrorKind::K3Intersection, pair + " share a three-element set", ij);
      if (s.size() != 4)
        throw Error(ErrorKind::BadIntersection,
                    pair + " share " + std::to_string(s.size()) + " elements", ij);
      const auto& oi = bl[i].lattice;
      const auto& oj = bl[j].lattice;
      for (Element u : s) {
        const Element ui = *f.local(i, u), uj = *f.local(j, u);
        if (f.ids_[i][oi(ui)] != f.ids_[j][oj(uj)])
          throw Error(ErrorKind::BadIntersection, pair + " disagree on the involution", ij);
        for (Element v : s) {
          const Element vi = *f.local(i, v), vj = *f.local(j, v);
          if (oi.poset().leq(ui, vi) != oj.poset().leq(uj, vj))
            throw Error(ErrorKind::BadIntersection, pair + " disagree on the order", ij);
          auto mi = meet(oi.poset(), ui, vi), mj = meet(oj.poset(), uj, vj);
          auto ji = join(oi.poset(), ui, vi), jj = join(oj.poset(), uj, vj);
          if (f.ids_[i][*mi] != f.ids_[j][*mj] || f.ids_[i][*ji] != f.ids_[j][*jj] ||
              !s.contains(f.ids_[i][*mi]) || !s.contains(f.ids_[i][*ji]))
            throw Error(ErrorKind::BadIntersection,
                        pair + " do not share a common subalgebra", ij);
        }
      }
      for (Element u : s) {
        if (u == f.bottom_ || u == f.top_) continue;
        for (std::size_t k : {i, j}) {
          const auto& p = bl[k].lattice.poset();
          const Element e = *f.local(k, u);
          if (!is_atom(p, e) && !is_coatom(p, e))
            throw Error(ErrorKind::NotAtomCoatom,
                        f.labels_[u] + " is neither an atom nor a coatom of " + bl[k].name,
                        {u, static_cast<Element>(k)});
        }
      }
    }
  return f;
}

AtomicAmalgam build_amalgam(const PastedFamily& f) {
  const std::size_t n = f.carrier_size();
  std::vector<Subset> above(n);
  std::vector<Element> inv(n, kMaxElements);
  std::vector<Subset> origin(n);
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    const auto& o = f.blocks()[i].lattice;
    for (Element e = 0; e < o.size(); ++e) {
      const Element c = f.carrier_id(i, e);
      origin[c].insert(static_cast<Element>(i));
      for (Element u : o.poset().up(e)) above[c].insert(f.carrier_id(i, u));
      const Element ci = f.carrier_id(i, o(e));
      if (inv[c] != kMaxElements && inv[c] != ci)
        throw Error(ErrorKind::InvolutionClash,
                    "blocks disagree on the involution of " + f.carrier_labels()[c], {c});
      inv[c] = ci;
    }
  }
  try {
    auto p = FinitePoset::from_relation(std::move(above), f.carrier_labels());
    return {OrthoPoset::make(std::move(p), std::move(inv)), std::move(origin)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvolutionViolation || e.kind() == ErrorKind::AntitoneViolation)
      throw Error(ErrorKind::InvolutionClash, e.what(), e.witness());
    throw Error(ErrorKind::OrderViolation, e.what(), e.witness());
  }
}

namespace {

// The linking atom of two blocks sharing four elements: the first shared
// element that is an atom of block i.
Element linking_atom(const PastedFamily& f, std::size_t i, std::size_t j) {
  const auto& p = f.blocks()[i].lattice.poset();
  for (Element c : f.shared(i, j))
    if (c != f.bottom() && c != f.top() && is_atom(p, *f.local(i, c))) return c;
  // Both inner elements are coatoms: fall back to the smaller one.
  Subset inner = f.shared(i, j);
  inner.erase(f.bottom());
  inner.erase(f.top());
  return *inner.front();
}

}  // namespace

std::vector<AtomicLoop> find_loops(const PastedFamily& f, std::size_t order) {
  std::vector<AtomicLoop> out;
  const std::size_t m = f.block_count();
  if (order < 3 || order > m) return out;
  const Subset trivial{f.bottom(), f.top()};
  auto linked = [&](std::size_t i, std::size_t j) { return f.shared(i, j).size() == 4; };

  std::vector<std::size_t> path;
  std::vector<bool> used(m, false);
  auto accept = [&]() {
    const std::size_t n = path.size();
    if (!linked(path[n - 1], path[0]) || path[1] > path[n - 1]) return;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool consecutive = b == a + 1 || (a == 0 && b == n - 1);
        if (!consecutive && f.shared(path[a], path[b]) != trivial) return;
        for (std::size_t c = b + 1; c < n; ++c)
          if ((f.shared(path[a], path[b]) & f.members(path[c])) != trivial) return;
      }
    AtomicLoop loop;
    loop.blocks = path;
    for (std::size_t a = 0; a < n; ++a) loop.atoms.push_back(linking_atom(f, path[a], path[(a + 1) % n]));
    out.push_back(std::move(loop));
  };
  auto extend = [&](auto&& self) -> void {
    if (path.size() == order) {
      accept();
      return;
    }
    for (std::size_t k = path[0] + 1; k < m; ++k)
      if (!used[k] && linked(path.back(), k)) {
        used[k] = true;
        path.push_back(k);
        self(self);
        path.pop_back();
        used[k] = false;
      }
  };
  for (std::size_t s = 0; s < m; ++s) {
    path = {s};
    used.assign(m, false);
    used[s] = true;
    extend(extend);
  }
  return out;
}

AmalgamClassification classify_amalgam(const PastedFamily& f) {
  AmalgamClassification r;
  const auto loops3 = find_loops(f, 3);
  r.loops3 = loops3.size();
  r.loops4 = find_loops(f, 4).size();
  r.predicted_para = true;
  r.predicted_sharply = r.loops3 == 0;
  r.predicted_lattice = r.loops3 == 0 && r.loops4 == 0;

  const auto a = build_amalgam(f);
  const auto& o = a.carrier;
  const auto& p = o.poset();
  r.direct_para = is_paraorthomodular(o).holds;
  r.direct_sharply = r.direct_para && is_orthogonal_poset(o).holds;
  r.direct_lattice = r.direct_para && is_lattice(p);

  if (!loops3.empty()) {
    // a1 links the first two blocks, a3 the last and the first: both live in
    // the first block.
    const Element a1 = loops3[0].atoms[0], a3 = loops3[0].atoms[2];
    r.loop3_witness = ElementPair{a1, a3};
    r.loop3_witness_confirmed = orthogonal(o, a1, a3) && !join(p, a1, a3);
  }

  // K_i ∪ K_j pasted on its own; the order induced from the whole amalgam
  // can be larger when a third block relates elements of both.
  for (std::size_t i = 0; i < f.block_count() && r.two_block_unions_are_lattices; ++i)
    for (std::size_t j = i + 1; j < f.block_count(); ++j) {
      std::vector<Glue> glue;
      for (Element c : f.shared(i, j))
        if (c != f.bottom() && c != f.top()) glue.push_back({0, *f.local(i, c), 1, *f.local(j, c)});
      const auto pair = build_amalgam(validate_family({f.blocks()[i], f.blocks()[j]}, std::move(glue)));
      if (!is_lattice(pair.carrier.poset()) || !is_paraorthomodular(pair.carrier).holds) {
        r.two_block_unions_are_lattices = false;
        break;
      }
    }

  for (const auto& b : f.blocks()) {
    const auto& bp = b.lattice.poset();
    for (Element x = 0; x < bp.size(); ++x)
      for (Element y = 0; y < bp.size(); ++y)
        if (meet_is_bottom(bp, x, y) && !orthogonal(b.lattice, x, y))
          r.blocks_satisfy_kleene_remark = false;
  }
  return r;
}

CoverTransferReport cover_transfer(const PastedFamily& f, const AtomicAmalgam& a) {
  CoverTransferReport r;
  const auto& o = a.carrier;
  const auto& p = o.poset();
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    const auto& bp = f.blocks()[i].lattice.poset();
    for (Element x = 0; x < bp.size(); ++x)
      for (Element y : bp.up(x)) {
        if (y == x) continue;
        const Element cx = f.carrier_id(i, x), cy = f.carrier_id(i, y);
        const bool block_cover = strictly_between(bp, x, y).empty();
        const Subset between = strictly_between(p, cx, cy);
        const bool amalgam_cover = between.empty();
        if (amalgam_cover && !block_cover) r.clauses.add("i", {cx, cy, static_cast<Element>(i)});
        if (cy != o(cx)) {
          if (block_cover != amalgam_cover) r.clauses.add("ii", {cx, cy, static_cast<Element>(i)});
        } else if (block_cover && !amalgam_cover) {
          const bool seen = std::any_of(r.exceptions.begin(), r.exceptions.end(),
                                        [&](const CoverException& e) { return e.x == cx && e.y == cy; });
          if (!seen) r.exceptions.push_back({cx, cy, i, between});
        }
      }
  }
  std::sort(r.exceptions.begin(), r.exceptions.end(), [](const auto& l, const auto& rr) {
    return std::pair(l.x, l.y) < std::pair(rr.x, rr.y);
  });
  return r;
}

}  // namespace qposet
