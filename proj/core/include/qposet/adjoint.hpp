#pragma once

#include <optional>

#include "qposet/implication.hpp"
#include "qposet/ortho.hpp"
#include "qposet/report.hpp"
#include "qposet/table.hpp"

namespace qposet {

/// The four adjointness conditions for a product table and an implication
/// table, each with the first violating triple (x, y, z).
///
/// Set-valued cells: "P <= z" means every member of P is below z and
/// "x <= T" means x is below every member of T. The subscripted variants use
/// ≤₂ and ≤₁, i.e. "some member of P is below z" and "x is below some member
/// of T".
struct AdjointnessReport {
  Verdict a;    ///< x⊙y <= z implies x <= y->z
  Verdict b;    ///< x <= y->z implies x⊙y <= z
  Verdict a21;  ///< x⊙y ≤₂ z implies x ≤₁ y->z
  Verdict b12;  ///< x ≤₁ y->z implies x⊙y ≤₂ z

  bool full() const { return a.holds && b.holds; }
  bool weak() const { return a21.holds && b12.holds; }
};

AdjointnessReport check_conditions(const OrthoPoset& o, const SetValuedTable& prod,
                                   const SetValuedTable& imp);

/// (A) agrees with (B), and (A)₂₁ with (B)₁₂, for ⊙_S and ->_S.
bool lemma_AB_equiv(const OrthoPoset& o);

/// left: (OI∨) and (OI∧); right: ⊙_S and ->_S form an adjoint pair.
/// Lattices only (NotALattice otherwise); the involution need not be antitone.
Equivalence omidentity_equiv(const OrthoPoset& o);

/// left: orthomodular; right: (A)₂₁ and (B)₁₂ for ⊙_S and ->_S.
/// Throws NotOrthogonal.
Equivalence sasom_equiv(const OrthoPoset& o);

/// Clause "th3": on a lattice, (A) for ⊙_S and ->_I forces orthomodularity.
/// Clause "posth3": (A)₂₁ for ⊙_S and ->_I forces orthomodularity.
/// Skipped on non-orthogonal inputs.
CheckReport th3_check(const OrthoPoset& o);

struct Residuation {
  /// x ⊙ y = least z with x <= y->z, when that exists for every pair.
  std::optional<ElementTable> product;
  /// First pair (x, y) without a least such z.
  std::optional<ElementPair> no_least;
  /// Conditions for the residual product against `imp`; meaningful only
  /// when `product` is set.
  AdjointnessReport report;

  bool adjoint() const { return product && report.full(); }
};

Residuation try_residuate(const OrthoPoset& o, const SetValuedTable& imp);
/// As try_residuate, but throws NoLeastElement(x, y) on failure.
Residuation residuate(const OrthoPoset& o, const SetValuedTable& imp);

/// Clauses "i" (x⊙x' = 0), "ii" (orthomodular), "iii" (x⊙y ≤₁ Max L(x,y)
/// and x⊙y <= x, y), "iv" (weakly Boolean) for the product adjoint to ->_I.
/// Throws PreconditionUnmet when no such product exists.
CheckReport adji_consequences(const OrthoPoset& o);

/// left: a product adjoint to ->_I exists; right: Boolean algebra.
/// Throws NotOrthogonal.
Equivalence adjebp_equiv(const OrthoPoset& o);

/// An orthogonal Boolean poset with the maximality property is a Boolean
/// algebra. True when the hypothesis fails.
bool adjibp_check(const OrthoPoset& o);

}  // namespace qposet
