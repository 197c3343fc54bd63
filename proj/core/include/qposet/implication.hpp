#pragma once

#include "qposet/ortho.hpp"
#include "qposet/report.hpp"
#include "qposet/table.hpp"

namespace qposet {

/// x ->_I y = y ∨ Max L(x',y'). Throws NotOrthogonal (with the offending
/// pair) unless the structure is an orthogonal poset.
SetValuedTable impl_I(const OrthoPoset& o);

/// x -> y = y ∨ (x' ∧ y'). Throws NotALattice.
ElementTable impl_I2(const OrthoPoset& o);

/// x ⊙_S y = y ∧ Min U(x,y').
SetValuedTable sasaki_proj(const OrthoPoset& o);
/// x ->_S y = x' ∨ Max L(x,y).
SetValuedTable sasaki_impl(const OrthoPoset& o);

/// x ->_I y = y' ->_S x' for all x, y.
bool duality_check(const OrthoPoset& o);

/// Clauses "i", "ii", "iii-leq", "iii-perp", "iii-geq", "iii'", "iv", "v"
/// compared as literal sets, plus "iv~2" and "v~2" compared up to ≈₂.
/// "iii-perp" is evaluated where x' ∧ y' exists; "iii'" where ' is a
/// complementation.
CheckReport check_th1(const OrthoPoset& o);

/// Clauses "i", "ii", "iii" of the sharply paraorthomodular lemma.
CheckReport check_lemma_sharply(const OrthoPoset& o);

/// left: paraorthomodular; right: x ->_I y = {1} implies x <= y.
Equivalence paraortho_iff_impl(const OrthoPoset& o);

/// x <= y implies (y -> z) <= (x -> z) for (I2). Throws NotALattice.
bool antitone_first_arg_I2(const OrthoPoset& o);

}  // namespace qposet
