#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qposet/amalgam.hpp"
#include "qposet/ortho.hpp"
#include "qposet/relative.hpp"

namespace qposet {

/// One entry of a section map: z = y^filter.
struct SectionEntry {
  Element filter = 0;
  Element y = 0;
  Element z = 0;
  friend auto operator<=>(const SectionEntry&, const SectionEntry&) = default;
};

/// Parsed structure file. Pairs refer to positions in `elements`.
///
/// Text form, one statement per line, '#' starts a comment:
///
///     name fig2a
///     elements 0 a b a' b' 1
///     cover 0 a              # 0 is covered by a (any x <= y pair is accepted)
///     inv a a'               # a' is the involute of a; unlisted elements are fixed
///     section a a' b'        # b' = a'^a inside the filter [a,1]
///
/// A file whose first non-blank character is '{' is read as JSON with keys
/// "name", "elements", "covers", "involution" and "sections" (a list of
/// [filter, y, z] triples), all by label.
struct StructureFile {
  std::string name;
  std::vector<std::string> elements;
  std::vector<ElementPair> covers;
  std::vector<ElementPair> involution;
  std::vector<SectionEntry> sections;

  /// 1-based source lines per entry, for semantic errors; empty or zero when
  /// the file was built in memory.
  std::size_t elements_line = 0;
  std::vector<std::size_t> cover_lines;
  std::vector<std::size_t> involution_lines;
  std::vector<std::size_t> section_lines;

  bool has_involution() const { return !involution.empty(); }
  bool has_sections() const { return !sections.empty(); }

  /// Same content, ignoring source positions.
  bool same_content(const StructureFile& o) const {
    return name == o.name && elements == o.elements && covers == o.covers &&
           involution == o.involution && sections == o.sections;
  }
};

/// Throws ParseError with line and column. Pairs are normalized: involution
/// pairs and section pairs by index, all lists sorted and deduplicated.
StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::filesystem::path& path);

/// Canonical text form; parse_structure(emit_structure(f)) has the same content.
std::string emit_structure(const StructureFile& f);
std::string emit_structure_json(const StructureFile& f);

/// Semantic conversions. Library errors are rethrown as ParseError pointing
/// at the line responsible where one can be identified.
FinitePoset to_poset(const StructureFile& f);
/// Requires `inv` lines.
OrthoPoset to_ortho(const StructureFile& f);
/// Rows not given are completed as in complete_sections, using the global
/// involution for [0,1] when there is one.
SectionedPoset to_sectioned(const StructureFile& f);

StructureFile to_structure_file(const FinitePoset& p, std::string name);
StructureFile to_structure_file(const OrthoPoset& o, std::string name);
/// Writes only the rows that differ from the defaults to_sectioned would fill in.
StructureFile to_structure_file(const SectionedPoset& s, std::string name);

/// Parsed family file:
///
///     family fig5
///     block K1 fig5_k1.poset      # path relative to the family file
///     identify K1:a K2:a
struct FamilyFile {
  struct BlockRef {
    std::string name;
    std::string path;
    std::size_t line = 0;
  };
  struct Identify {
    std::string block_a, label_a, block_b, label_b;
    std::size_t line = 0;
  };
  std::string name;
  std::vector<BlockRef> blocks;
  std::vector<Identify> identifications;
};

FamilyFile parse_family(std::string_view text);
/// Loads every block relative to `base_dir` and validates the family.
PastedFamily to_family(const FamilyFile& f, const std::filesystem::path& base_dir);
PastedFamily load_family(const std::filesystem::path& path);

/// Whole file as a string; throws Error(Parse) when it cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace qposet
