#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qposet/ortho.hpp"
#include "qposet/relative.hpp"

namespace qposet {

enum class StructureClass {
  BoundedPoset,
  Ortho,              ///< bounded poset + antitone involution
  Sectioned,          ///< bounded poset + antitone involution on every [x,1]
  Lattice,            ///< bounded lattice
  InvolutiveLattice,  ///< bounded lattice + any involution (x'' = x)
};

std::string_view to_string(StructureClass c);
std::optional<StructureClass> parse_structure_class(std::string_view s);

/// Largest element count the enumerator accepts.
inline constexpr std::size_t kMaxEnumerationSize = 9;

struct EnumerationSpec {
  std::size_t min_n = 1;
  std::size_t max_n = 6;
  StructureClass cls = StructureClass::Ortho;
  /// false: every labelling of the inner elements (bottom first, top last).
  bool up_to_iso = true;
  /// Predicate names from the registry; a leading '!' negates.
  std::vector<std::string> filters;
  /// Stop with BudgetExceeded after this many generated structures (0 = no cap).
  std::size_t budget = 0;
};

/// Throws PreconditionUnmet for bad bounds and UnknownName for unknown filters.
void validate(const EnumerationSpec& spec);

struct Instance {
  std::size_t n = 0;
  StructureClass cls = StructureClass::BoundedPoset;
  /// Stable identifier: "n<size>:<order code>[:<involution>][:<sections>]".
  std::string code;
  FinitePoset poset;
  /// Ortho and InvolutiveLattice instances; for Sectioned the [0,1] section.
  std::optional<OrthoPoset> ortho;
  std::optional<SectionedPoset> sectioned;
};

/// Calls `sink` for every structure in deterministic order (by size, then
/// canonical code, then involution/sections). Return false from `sink` to stop.
void enumerate(const EnumerationSpec& spec, const std::function<bool(const Instance&)>& sink);
std::vector<Instance> enumerate_all(const EnumerationSpec& spec);

/// Canonical code of the order alone (relabelings fixing bottom and top).
std::string canonical_code(const FinitePoset& p);
/// Canonical code of order + involution, comparable with Instance::code.
std::string canonical_code(const OrthoPoset& o);

// ---------------------------------------------------------------------------
// Predicate registry.

using Predicate = std::function<bool(const Instance&)>;

/// Names: lattice, join-semilattice, distributive, orthogonal,
/// paraorthomodular, sharply-paraorthomodular, regular, complementation,
/// orthomodular, weakly-boolean, boolean-poset, boolean-algebra, kleene,
/// maximality, relatively-paraorthomodular, compatible. Involution-based
/// names are false on instances without an involution.
const std::vector<std::string>& predicate_names();
/// Accepts a leading '!' for negation. Throws UnknownName.
Predicate find_predicate(std::string_view name);
/// Evaluates a named predicate on a plain structure (used by the CLI).
bool eval_predicate(std::string_view name, const Instance& inst);

Instance make_instance(const OrthoPoset& o);
Instance make_instance(const SectionedPoset& s);

/// Smallest enumerated structure satisfying `a` but not `b`.
std::optional<Instance> find_counterexample(std::string_view a, std::string_view b,
                                            const EnumerationSpec& spec);

}  // namespace qposet
