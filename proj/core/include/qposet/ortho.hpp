#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qposet/poset.hpp"

namespace qposet {

/// Outcome of a predicate that can name the elements responsible for a
/// failure. `witness` is empty when the predicate holds.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;
  std::string note;

  explicit operator bool() const { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<Element> w, std::string note = {}) {
    return {false, std::move(w), std::move(note)};
  }
};

/// A bounded poset with an involution x -> x'. Built through `make`, which
/// insists on an antitone involution, or `make_involutive`, which only asks
/// x'' = x (some lattice statements are phrased for plain involutions).
class OrthoPoset {
 public:
  static OrthoPoset make(FinitePoset p, std::vector<Element> inv);
  static OrthoPoset make_involutive(FinitePoset p, std::vector<Element> inv);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element operator()(Element x) const { return inv_[x]; }
  const std::vector<Element>& involution() const { return inv_; }
  bool antitone() const { return antitone_; }

  Subset image(const Subset& a) const {
    Subset out;
    for (Element x : a) out.insert(inv_[x]);
    return out;
  }

  friend bool operator==(const OrthoPoset&, const OrthoPoset&) = default;

 private:
  OrthoPoset(FinitePoset p, std::vector<Element> inv, bool antitone)
      : poset_(std::move(p)), inv_(std::move(inv)), antitone_(antitone) {}

  FinitePoset poset_;
  std::vector<Element> inv_;
  bool antitone_ = true;
};

/// Same as OrthoPoset::make; throws AntitoneViolation or InvolutionViolation.
OrthoPoset validate_involution(FinitePoset p, std::vector<Element> inv);

/// x <= y'.
inline bool orthogonal(const OrthoPoset& o, Element x, Element y) {
  return o.poset().leq(x, o(y));
}

/// Orthogonal pairs always have a join. Witness: first orthogonal pair without one.
Verdict is_orthogonal_poset(const OrthoPoset& o);

/// (P) with "x' ∧ y = 0" read as L(x',y) = {0}. Witness (x, y).
Verdict is_paraorthomodular(const OrthoPoset& o);
Verdict is_sharply_paraorthomodular(const OrthoPoset& o);

/// x ∧ x' <= y ∨ y' for all x, y. Throws UndefinedTerm(x, y) when one of the
/// terms does not exist. Witness (x, y) on failure.
Verdict is_regular(const OrthoPoset& o);

/// L(x,x') = {0} and U(x,x') = {1} for all x. Witness (x).
Verdict is_complementation(const OrthoPoset& o);

/// Orthogonal, x <= y implies y ∧ x' exists and x ∨ (y ∧ x') = y, and ' is a
/// complementation, checked in that order. Witness (x, y) for the law.
Verdict is_orthomodular(const OrthoPoset& o);

struct OrthomodularVariants {
  bool om = false;     ///< the element law over all x <= y
  bool om_u = false;   ///< x ∨ (Min U(x,y) ∧ x') equals Min U(x,y) as sets
  bool om_ue = false;  ///< the same up to ≈₂
};

/// Evaluates the three formulations independently. Undefined terms make a
/// formulation fail. Meaningful on orthogonal posets.
OrthomodularVariants orthomodular_variants(const OrthoPoset& o);

/// a ∧ b = a ∧ b' = 0 implies a = 0 (meets read as lower cones). Witness (a, b).
Verdict is_weakly_boolean(const OrthoPoset& o);

/// Distributive (LU) and complemented.
bool is_boolean_poset(const OrthoPoset& o);
/// Boolean poset that is also a lattice.
bool is_boolean_algebra(const OrthoPoset& o);
/// Distributive, regular, paraorthomodular lattice.
bool is_kleene_lattice(const OrthoPoset& o);

/// First pair (x, y) with x < y and L(x',y) = {0} such that {0,x,y,y',x',1}
/// induces the six-element hexagon with its involution.
std::optional<ElementPair> find_benzene(const OrthoPoset& o);

}  // namespace qposet
