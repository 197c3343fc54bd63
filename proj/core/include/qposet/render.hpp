#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qposet/amalgam.hpp"
#include "qposet/ortho.hpp"
#include "qposet/table.hpp"

namespace qposet {

/// Operator table with rows and columns in element order. Singleton cells
/// print as the bare label, others as "{a,b}". Columns are padded to a common
/// width and trailing blanks are trimmed:
///
///     ->  | 0   a   ...
///     ----+---------...
///     0   | 1   1   ...
std::string render_table(const FinitePoset& p, const SetValuedTable& t, std::string_view corner = "->");
std::string render_table(const FinitePoset& p, const ElementTable& t, std::string_view corner = "->");

/// Graphviz digraph of the cover relation, drawn bottom to top
/// (rankdir=BT), nodes grouped by height. Nodes are n0, n1, ... with the
/// element label as `label` and, when given, the involute as `involution`.
std::string export_dot(const FinitePoset& p, std::string_view name,
                       const std::vector<Element>* involution = nullptr);
std::string export_dot(const OrthoPoset& o, std::string_view name);
/// Adds a `blocks` attribute listing the blocks each element belongs to.
std::string export_dot(const PastedFamily& f, const AtomicAmalgam& a, std::string_view name);

}  // namespace qposet
