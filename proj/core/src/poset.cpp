#include "qposet/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "qposet/error.hpp"

namespace qposet {

namespace {

void require_size(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NotBounded, "empty poset");
  if (n > kMaxElements)
    throw Error(ErrorKind::TooManyElements,
                std::to_string(n) + " elements exceed the capacity of " +
                    std::to_string(kMaxElements));
}

std::string letter_label(std::size_t i) {
  // a..z, then aa, ab, ...
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  }
  return s;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n, Element bottom, Element top) {
  std::vector<std::string> out(n);
  std::size_t k = 0;
  for (Element x = 0; x < n; ++x) {
    if (x == bottom)
      out[x] = "0";
    else if (x == top)
      out[x] = "1";
    else
      out[x] = letter_label(k++);
  }
  return out;
}

FinitePoset FinitePoset::from_covers(std::size_t n, std::span<const ElementPair> pairs,
                                     std::vector<std::string> labels) {
  require_size(n);
  std::vector<Subset> above(n);
  for (Element x = 0; x < n; ++x) above[x].insert(x);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw Error(ErrorKind::IndexOutOfRange, "pair refers to a missing element", {x, y});
    above[x].insert(y);
  }
  // Warshall: whenever k is above x, everything above k is above x.
  for (Element k = 0; k < n; ++k)
    for (Element x = 0; x < n; ++x)
      if (above[x].contains(k)) above[x] |= above[k];
  return from_relation(std::move(above), std::move(labels));
}

FinitePoset FinitePoset::from_relation(std::vector<Subset> above, std::vector<std::string> labels) {
  const std::size_t n = above.size();
  require_size(n);
  const Subset universe = Subset::first(n);
  for (Element x = 0; x < n; ++x) {
    if (!above[x].is_subset_of(universe))
      throw Error(ErrorKind::IndexOutOfRange, "relation row leaves the element range", {x});
    if (!above[x].contains(x))
      throw Error(ErrorKind::NotReflexive, "element is not below itself", {x});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y : above[x]) {
      if (y != x && above[y].contains(x))
        throw Error(ErrorKind::NotAntisymmetric, "not antisymmetric: cycle through elements",
                    {x, y});
      if (!above[y].is_subset_of(above[x])) {
        Element z = *(above[y] - above[x]).front();
        throw Error(ErrorKind::NotTransitive, "not transitive", {x, y, z});
      }
    }

  FinitePoset p;
  p.up_ = std::move(above);
  p.down_.assign(n, Subset{});
  for (Element x = 0; x < n; ++x)
    for (Element y : p.up_[x]) p.down_[y].insert(x);

  std::optional<Element> bottom, top;
  for (Element x = 0; x < n; ++x) {
    if (p.up_[x] == universe) bottom = x;
    if (p.down_[x] == universe) top = x;
  }
  if (!bottom || !top) throw Error(ErrorKind::NotBounded, "poset has no bottom or no top");
  p.bottom_ = *bottom;
  p.top_ = *top;
  p.finish(std::move(labels));
  return p;
}

void FinitePoset::finish(std::vector<std::string> labels) {
  const std::size_t n = size();
  if (labels.empty()) labels = default_labels(n, bottom_, top_);
  if (labels.size() != n)
    throw Error(ErrorKind::IndexOutOfRange,
                "label count " + std::to_string(labels.size()) + " does not match " +
                    std::to_string(n) + " elements");
  std::unordered_set<std::string> seen;
  for (Element x = 0; x < n; ++x)
    if (!seen.insert(labels[x]).second)
      throw Error(ErrorKind::UnknownName, "duplicate label '" + labels[x] + "'", {x});
  labels_ = std::move(labels);
}

Element FinitePoset::check(Element x) const {
  if (x >= size())
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(x) + " outside poset of size " + std::to_string(size()),
                {x});
  return x;
}

void FinitePoset::check(const Subset& a) const {
  if (!a.is_subset_of(all()))
    throw Error(ErrorKind::IndexOutOfRange, "subset refers to a missing element",
                {*(a - all()).front()});
}

std::optional<Element> FinitePoset::find(std::string_view label) const {
  for (Element x = 0; x < size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

std::string FinitePoset::format(const Subset& s, bool brace_singletons) const {
  if (!brace_singletons && s.size() == 1) return labels_[*s.front()];
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ',';
    out += labels_[x];
    first = false;
  }
  return out + "}";
}

Subset lower_cone(const FinitePoset& p, const Subset& a) {
  p.check(a);
  Subset out = p.all();
  for (Element x : a) out &= p.down(x);
  return out;
}

Subset upper_cone(const FinitePoset& p, const Subset& a) {
  p.check(a);
  Subset out = p.all();
  for (Element x : a) out &= p.up(x);
  return out;
}

Subset max_of(const FinitePoset& p, const Subset& a) {
  p.check(a);
  Subset out;
  for (Element x : a) {
    Subset strictly_above = p.up(x);
    strictly_above.erase(x);
    if (!strictly_above.intersects(a)) out.insert(x);
  }
  return out;
}

Subset min_of(const FinitePoset& p, const Subset& a) {
  p.check(a);
  Subset out;
  for (Element x : a) {
    Subset strictly_below = p.down(x);
    strictly_below.erase(x);
    if (!strictly_below.intersects(a)) out.insert(x);
  }
  return out;
}

bool subset_rel(const FinitePoset& p, const Subset& a, const Subset& b, SubsetRelation kind) {
  p.check(a);
  p.check(b);
  switch (kind) {
    case SubsetRelation::Leq:
      for (Element x : a)
        if (!b.is_subset_of(p.up(x))) return false;
      return true;
    case SubsetRelation::Leq1:
      for (Element x : a)
        if (!p.up(x).intersects(b)) return false;
      return true;
    case SubsetRelation::Leq2:
      for (Element y : b)
        if (!p.down(y).intersects(a)) return false;
      return true;
    case SubsetRelation::Approx2:
      return subset_rel(p, a, b, SubsetRelation::Leq2) && subset_rel(p, b, a, SubsetRelation::Leq2);
  }
  return false;
}

std::optional<Element> meet(const FinitePoset& p, Element x, Element y) {
  p.check(x);
  p.check(y);
  return max_of(p, lower_cone(p, x, y)).only();
}

std::optional<Element> join(const FinitePoset& p, Element x, Element y) {
  p.check(x);
  p.check(y);
  return min_of(p, upper_cone(p, x, y)).only();
}

Subset join_each(const FinitePoset& p, Element y, const Subset& a) {
  Subset out;
  for (Element x : a) {
    auto j = join(p, y, x);
    if (!j)
      throw Error(ErrorKind::JoinMissing,
                  "join of " + p.label(y) + " and " + p.label(x) + " does not exist", {y, x});
    out.insert(*j);
  }
  return out;
}

Subset meet_each(const FinitePoset& p, Element y, const Subset& a) {
  Subset out;
  for (Element x : a) {
    auto m = meet(p, y, x);
    if (!m)
      throw Error(ErrorKind::JoinMissing,
                  "meet of " + p.label(y) + " and " + p.label(x) + " does not exist", {y, x});
    out.insert(*m);
  }
  return out;
}

bool is_join_semilattice(const FinitePoset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y)) return false;
  return true;
}

bool is_lattice(const FinitePoset& p) {
  // A finite bounded join-semilattice is a lattice, but check meets anyway:
  // it costs nothing at these sizes and keeps the predicate literal.
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y) || !meet(p, x, y)) return false;
  return true;
}

namespace {

Subset lu(const FinitePoset& p, const Subset& a) { return lower_cone(p, upper_cone(p, a)); }
Subset ul(const FinitePoset& p, const Subset& a) { return upper_cone(p, lower_cone(p, a)); }

}  // namespace

bool is_distributive_poset(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Subset uxy = upper_cone(p, x, y);
      for (Element z = 0; z < n; ++z) {
        Subset lhs = lower_cone(p, uxy);
        lhs &= p.down(z);
        if (lhs != lu(p, lower_cone(p, x, z) | lower_cone(p, y, z))) return false;
      }
    }
  return true;
}

std::array<bool, 4> distributive_identities(const FinitePoset& p) {
  std::array<bool, 4> ok{true, true, true, true};
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Subset zs = Subset::singleton(z);
        if (ok[0] && lower_cone(p, upper_cone(p, x, y) | zs) !=
                         lu(p, lower_cone(p, x, z) | lower_cone(p, y, z)))
          ok[0] = false;
        if (ok[1] && upper_cone(p, lower_cone(p, x, z) | lower_cone(p, y, z)) !=
                         ul(p, upper_cone(p, x, y) | zs))
          ok[1] = false;
        if (ok[2] && upper_cone(p, lower_cone(p, x, y) | zs) !=
                         ul(p, upper_cone(p, x, z) | upper_cone(p, y, z)))
          ok[2] = false;
        if (ok[3] && lower_cone(p, upper_cone(p, x, z) | upper_cone(p, y, z)) !=
                         lu(p, lower_cone(p, x, y) | zs))
          ok[3] = false;
      }
  return ok;
}

std::pair<bool, bool> distributive_identities_nary(const FinitePoset& p, std::size_t arity) {
  const std::size_t n = p.size();
  bool first = true, second = true;
  std::vector<Element> xs(arity, 0);
  // Odometer over P^arity.
  while (true) {
    Subset members;
    for (Element x : xs) members.insert(x);
    for (Element z = 0; z < n && (first || second); ++z) {
      const Subset zs = Subset::singleton(z);
      if (first) {
        Subset cones;
        for (Element x : xs) cones |= lower_cone(p, x, z);
        if (lower_cone(p, upper_cone(p, members) | zs) != lu(p, cones)) first = false;
      }
      if (second) {
        Subset cones;
        for (Element x : xs) cones |= upper_cone(p, x, z);
        if (upper_cone(p, lower_cone(p, members) | zs) != ul(p, cones)) second = false;
      }
    }
    if (!first && !second) break;
    std::size_t i = 0;
    while (i < arity && ++xs[i] == n) xs[i++] = 0;
    if (i == arity) break;
  }
  return {first, second};
}

namespace {

// Visits every nonempty subset of P with at most `max_size` members.
template <typename F>
bool all_small_subsets(std::size_t n, std::size_t max_size, F&& f) {
  std::vector<Element> pick;
  auto rec = [&](auto&& self, Element from) -> bool {
    if (!pick.empty()) {
      Subset m;
      for (Element x : pick) m.insert(x);
      if (!f(m)) return false;
    }
    if (pick.size() == max_size) return true;
    for (Element x = from; x < n; ++x) {
      pick.push_back(x);
      if (!self(self, x + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

bool mub_complete_up_to(const FinitePoset& p, std::size_t max_size) {
  return all_small_subsets(p.size(), max_size, [&](const Subset& m) {
    const Subset ub = upper_cone(p, m);
    const Subset minimal = min_of(p, ub);
    for (Element x : ub)
      if (!p.down(x).intersects(minimal)) return false;
    return true;
  });
}

bool mlb_complete_up_to(const FinitePoset& p, std::size_t max_size) {
  return all_small_subsets(p.size(), max_size, [&](const Subset& m) {
    const Subset lb = lower_cone(p, m);
    const Subset maximal = max_of(p, lb);
    for (Element x : lb)
      if (!p.up(x).intersects(maximal)) return false;
    return true;
  });
}

bool is_mub_complete(const FinitePoset& p) { return mub_complete_up_to(p, 2); }
bool is_mlb_complete(const FinitePoset& p) { return mlb_complete_up_to(p, 2); }

bool has_maximality(const FinitePoset& p) {
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a; b < p.size(); ++b)
      if (max_lower(p, a, b).empty()) return false;
  return true;
}

Subset strictly_between(const FinitePoset& p, Element x, Element y) {
  Subset s = p.up(x) & p.down(y);
  s.erase(x);
  s.erase(y);
  return s;
}

std::vector<ElementPair> covers(const FinitePoset& p) {
  std::vector<ElementPair> out;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x))
      if (y != x && strictly_between(p, x, y).empty()) out.emplace_back(x, y);
  return out;
}

FinitePoset induced(const FinitePoset& p, const Subset& members) {
  p.check(members);
  std::vector<Element> old;
  for (Element x : members) old.push_back(x);
  std::vector<Subset> above(old.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < old.size(); ++i) {
    labels.push_back(p.label(old[i]));
    for (std::size_t j = 0; j < old.size(); ++j)
      if (p.leq(old[i], old[j])) above[i].insert(static_cast<Element>(j));
  }
  return FinitePoset::from_relation(std::move(above), std::move(labels));
}

}  // namespace qposet
