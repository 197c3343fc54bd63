#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qposet/subset.hpp"

namespace qposet {

using ElementPair = std::pair<Element, Element>;

/// A finite bounded poset stored as its full reflexive-transitive order
/// relation, one bitset row per element in each direction.
///
/// Immutable after construction; every constructor validates reflexivity,
/// antisymmetry, transitivity and boundedness and throws qposet::Error.
class FinitePoset {
 public:
  /// Transitive closure of `pairs` (each meaning first <= second) on n elements.
  static FinitePoset from_covers(std::size_t n, std::span<const ElementPair> pairs,
                                 std::vector<std::string> labels = {});

  /// `above[x]` must already be the principal filter of x.
  static FinitePoset from_relation(std::vector<Subset> above, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Principal filter [x,1].
  const Subset& up(Element x) const { return up_[x]; }
  /// Principal ideal [0,x].
  const Subset& down(Element x) const { return down_[x]; }
  Subset all() const { return Subset::first(size()); }

  /// Throws IndexOutOfRange unless x < size().
  Element check(Element x) const;
  void check(const Subset& a) const;

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  /// "{a,b'}" in index order; singletons unbraced when `brace_singletons` is false.
  std::string format(const Subset& s, bool brace_singletons = true) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.up_ == b.up_ && a.labels_ == b.labels_;
  }

 private:
  FinitePoset() = default;
  void finish(std::vector<std::string> labels);

  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Labels used when a structure is built without names: bottom "0", top "1",
/// the rest "a", "b", ... in index order.
std::vector<std::string> default_labels(std::size_t n, Element bottom, Element top);

// ---------------------------------------------------------------------------
// Cones and extremal elements. L(empty) = U(empty) = P.

Subset lower_cone(const FinitePoset& p, const Subset& a);
Subset upper_cone(const FinitePoset& p, const Subset& a);
Subset max_of(const FinitePoset& p, const Subset& a);
Subset min_of(const FinitePoset& p, const Subset& a);

inline Subset lower_cone(const FinitePoset& p, Element x, Element y) {
  return p.down(x) & p.down(y);
}
inline Subset upper_cone(const FinitePoset& p, Element x, Element y) { return p.up(x) & p.up(y); }

/// Max L(x,y) and Min U(x,y).
inline Subset max_lower(const FinitePoset& p, Element x, Element y) {
  return max_of(p, lower_cone(p, x, y));
}
inline Subset min_upper(const FinitePoset& p, Element x, Element y) {
  return min_of(p, upper_cone(p, x, y));
}

/// L(x,y) = {0}; the reading of "x ∧ y = 0" that does not need the meet.
inline bool meet_is_bottom(const FinitePoset& p, Element x, Element y) {
  return lower_cone(p, x, y) == Subset::singleton(p.bottom());
}

// ---------------------------------------------------------------------------
// The four relations on subsets.

enum class SubsetRelation {
  Leq,      ///< every a <= every b
  Leq1,     ///< every a is below some b
  Leq2,     ///< every b is above some a
  Approx2,  ///< Leq2 both ways
};

bool subset_rel(const FinitePoset& p, const Subset& a, const Subset& b, SubsetRelation kind);

// ---------------------------------------------------------------------------
// Meets and joins. Absence is a normal result.

std::optional<Element> meet(const FinitePoset& p, Element x, Element y);
std::optional<Element> join(const FinitePoset& p, Element x, Element y);

/// {y ∨ a | a ∈ A}; throws JoinMissing naming (y, a) if a join is absent.
Subset join_each(const FinitePoset& p, Element y, const Subset& a);
/// {y ∧ a | a ∈ A}; throws JoinMissing (for the dual) if a meet is absent.
Subset meet_each(const FinitePoset& p, Element y, const Subset& a);

bool is_lattice(const FinitePoset& p);
bool is_join_semilattice(const FinitePoset& p);

// ---------------------------------------------------------------------------
// Distributivity (LU identities).

/// L(U(x,y),z) = LU(L(x,z),L(y,z)) for all x, y, z.
bool is_distributive_poset(const FinitePoset& p);

/// The four binary LU identities, in the order
///   L(U(x,y),z) = LU(L(x,z),L(y,z)),
///   U(L(x,z),L(y,z)) = UL(U(x,y),z),
///   U(L(x,y),z) = UL(U(x,z),U(y,z)),
///   L(U(x,z),U(y,z)) = LU(L(x,y),z).
std::array<bool, 4> distributive_identities(const FinitePoset& p);

/// The n-ary identities for `arity` arguments x1..xn:
///   first:  L(U(x1..xn),z) = LU(L(x1,z),...,L(xn,z)),
///   second: U(L(x1..xn),z) = UL(U(x1,z),...,U(xn,z)).
std::pair<bool, bool> distributive_identities_nary(const FinitePoset& p, std::size_t arity);

// ---------------------------------------------------------------------------
// Completeness conditions. On finite posets all of these hold; they are
// computed anyway because the theorem harness uses them as regression guards.

/// Every subset M with |M| <= max_size: each upper bound of M has a minimal
/// upper bound of M below it.
bool mub_complete_up_to(const FinitePoset& p, std::size_t max_size);
bool mlb_complete_up_to(const FinitePoset& p, std::size_t max_size);

/// Pairs suffice on a finite poset: Min U(M) is reachable below every upper
/// bound because U(M) is finite and nonempty whenever it has an element.
bool is_mub_complete(const FinitePoset& p);
bool is_mlb_complete(const FinitePoset& p);
/// Every L(a,b) has a maximal element.
bool has_maximality(const FinitePoset& p);

/// All pairs (x, y) with x < y and nothing strictly between, sorted.
std::vector<ElementPair> covers(const FinitePoset& p);

/// Elements strictly between x and y.
Subset strictly_between(const FinitePoset& p, Element x, Element y);

/// Induced subposet on `members` (must contain a bottom and a top of the
/// induced order). Element i of the result is the i-th member in index order.
FinitePoset induced(const FinitePoset& p, const Subset& members);

}  // namespace qposet
