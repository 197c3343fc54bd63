#pragma once

#include <limits>
#include <vector>

#include "qposet/ortho.hpp"
#include "qposet/report.hpp"
#include "qposet/table.hpp"

namespace qposet {

/// Marks "outside the filter" in a section row.
inline constexpr Element kNone = std::numeric_limits<Element>::max();

/// A bounded poset with an antitone involution ^x on every principal filter
/// [x,1]. `section(x)[y]` is y^x for y >= x and kNone elsewhere.
class SectionedPoset {
 public:
  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::vector<Element>& section(Element x) const { return sections_[x]; }
  /// y^x; y must lie in [x,1].
  Element at(Element x, Element y) const { return sections_[x][y]; }
  const std::vector<std::vector<Element>>& sections() const { return sections_; }

  /// The structure (P, <=, ^0, 0, 1).
  OrthoPoset bottom_section() const;

  friend bool operator==(const SectionedPoset&, const SectionedPoset&) = default;

 private:
  friend SectionedPoset validate_sections(FinitePoset, std::vector<std::vector<Element>>);
  SectionedPoset(FinitePoset p, std::vector<std::vector<Element>> s)
      : poset_(std::move(p)), sections_(std::move(s)) {}

  FinitePoset poset_;
  std::vector<std::vector<Element>> sections_;
};

/// Throws SectionViolation naming (x, y) when a row is not an antitone
/// involution of [x,1] or maps outside it.
SectionedPoset validate_sections(FinitePoset p, std::vector<std::vector<Element>> sections);

/// Fills rows left entirely as kNone: one-element filters get the identity,
/// two-element filters the swap, and [0,1] the global involution when one is
/// given. Throws SectionViolation for any other missing row.
std::vector<std::vector<Element>> complete_sections(const FinitePoset& p,
                                                    std::vector<std::vector<Element>> partial,
                                                    const std::vector<Element>* global = nullptr);

/// (RP): x <= y <= z, y^x ∧ z = x inside [x,1] imply y = z. Witness (x, y, z).
Verdict is_relatively_paraorthomodular(const SectionedPoset& s);

/// (C): x <= y <= z implies z^y = z^x ∨ y. Witness (x, y, z). Throws
/// JoinMissing when z^x ∨ y does not exist.
Verdict check_C(const SectionedPoset& s);

/// x -> y = (Min U(x,y))^y.
SetValuedTable impl_I3(const SectionedPoset& s);

/// x -> y = (x ∨ y)^y. Throws NotJoinSemilattice.
ElementTable impl_I4(const SectionedPoset& s);

/// Clauses "i", "ii", "iii-leq", "iii-join", "iii-geq", "iv", "v" (literal sets)
/// and "iv~2", "v~2" (≈₂). Skipped unless (RP) holds.
CheckReport check_th2(const SectionedPoset& s);

/// left: (P, ^0) paraorthomodular; right: x <= y^0 and x -> y = y imply x = y^0.
Equivalence para_via_I3(const SectionedPoset& s);

/// left: (RP); right: x -> y = 1 implies x <= y. Throws CompatibilityFailed
/// unless (C) holds.
Equivalence relpara_via_impl_under_C(const SectionedPoset& s);

/// x <= y implies (y -> z) <= (x -> z) for (I4).
bool antitone_first_arg_I4(const SectionedPoset& s);

/// Sections z^x = z' ∨ x on a lattice with antitone involution. The result
/// is validated, so non-orthomodular inputs usually throw SectionViolation.
SectionedPoset relative_orthocomplement_sections(const OrthoPoset& o);

}  // namespace qposet
