#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qposet/ortho.hpp"
#include "qposet/report.hpp"

namespace qposet {

struct Block {
  std::string name;
  OrthoPoset lattice;
};

/// Identifies element `a` of block `block_a` with element `b` of block `block_b`.
struct Glue {
  std::size_t block_a = 0;
  Element a = 0;
  std::size_t block_b = 0;
  Element b = 0;
};

/// A validated family of Kleene blocks. Block bottoms are identified with
/// each other, and so are block tops; everything else is glued only where
/// `Glue` says so.
class PastedFamily {
 public:
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Number of elements in the glued union.
  std::size_t carrier_size() const { return labels_.size(); }
  const std::vector<std::string>& carrier_labels() const { return labels_; }
  /// Carrier id of element e of block i.
  Element carrier_id(std::size_t i, Element e) const { return ids_[i][e]; }
  /// Carrier ids making up block i.
  const Subset& members(std::size_t i) const { return members_[i]; }
  /// K_i ∩ K_j as carrier ids.
  Subset shared(std::size_t i, std::size_t j) const { return members_[i] & members_[j]; }
  /// Block-local element for a carrier id, if the block contains it.
  std::optional<Element> local(std::size_t i, Element c) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

 private:
  friend PastedFamily validate_family(std::vector<Block>, std::vector<Glue>);
  std::vector<Block> blocks_;
  std::vector<std::vector<Element>> ids_;
  std::vector<Subset> members_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Checks every block (Kleene, at least six elements) and every pairwise
/// intersection ({0,1} or a four-element common subalgebra whose inner
/// elements are atoms or coatoms of both blocks). Throws BlockTooSmall,
/// NotKleene, InvalidGlue, K3Intersection, BadIntersection or NotAtomCoatom.
PastedFamily validate_family(std::vector<Block> blocks, std::vector<Glue> glue);

struct AtomicAmalgam {
  OrthoPoset carrier;
  /// For each carrier element, the indices of the blocks containing it.
  std::vector<Subset> origin;
};

/// Union of the block orders with the blockwise involution. Throws
/// OrderViolation or InvolutionClash if the union is not a bounded poset with
/// antitone involution (impossible for a valid family).
AtomicAmalgam build_amalgam(const PastedFamily& f);

struct AtomicLoop {
  std::vector<std::size_t> blocks;
  /// atoms[j] is the shared atom of blocks[j] and blocks[(j+1) % n].
  std::vector<Element> atoms;
};

/// All atomic loops of the given order, one per cycle up to rotation and
/// reflection, in lexicographic order of block sequences. Every triple of
/// loop blocks must meet in {0,1}, including triples involving the last.
std::vector<AtomicLoop> find_loops(const PastedFamily& f, std::size_t order);

struct AmalgamClassification {
  std::size_t loops3 = 0;
  std::size_t loops4 = 0;

  // Predicted from loops.
  bool predicted_para = true;
  bool predicted_sharply = false;
  bool predicted_lattice = false;

  // Computed on the carrier.
  bool direct_para = false;
  bool direct_sharply = false;
  bool direct_lattice = false;

  /// For the first 3-loop: its atoms a1, a3, which are orthogonal without a join.
  std::optional<ElementPair> loop3_witness;
  bool loop3_witness_confirmed = false;

  /// Each K_i ∪ K_j, pasted on its own, is a paraorthomodular lattice.
  bool two_block_unions_are_lattices = true;
  bool blocks_satisfy_kleene_remark = true;

  bool agree() const {
    return predicted_para == direct_para && predicted_sharply == direct_sharply &&
           predicted_lattice == direct_lattice;
  }
  /// Some statement about amalgams was contradicted by the computation.
  bool theorem_violation() const {
    return !agree() || !direct_para || (loop3_witness && !loop3_witness_confirmed) ||
           !two_block_unions_are_lattices || !blocks_satisfy_kleene_remark;
  }
};

AmalgamClassification classify_amalgam(const PastedFamily& f);

struct CoverException {
  Element x = 0;
  Element y = 0;
  std::size_t block = 0;
  Subset interlopers;
};

struct CoverTransferReport {
  /// Clause "i": an amalgam cover is a block cover. Clause "ii": for y != x'
  /// the two notions coincide.
  CheckReport clauses;
  /// Pairs with y = x' that cover in a block but not in the amalgam.
  std::vector<CoverException> exceptions;
};

CoverTransferReport cover_transfer(const PastedFamily& f, const AtomicAmalgam& a);

}  // namespace qposet
