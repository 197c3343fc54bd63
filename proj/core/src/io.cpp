#include "qposet/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qposet/error.hpp"

namespace qposet {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits one line at whitespace, dropping a trailing '#' comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    f(++line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{';
  }
  return false;
}

void expect_args(const std::vector<Token>& t, std::size_t line, std::size_t args) {
  if (t.size() != args + 1)
    throw ParseError(line, t.front().column,
                     "'" + std::string(t.front().text) + "' expects " + std::to_string(args) +
                         " argument" + (args == 1 ? "" : "s") + ", got " +
                         std::to_string(t.size() - 1));
}

// Sorts `items` together with their source lines, dropping later duplicates.
template <class T>
void sort_with_lines(std::vector<T>& items, std::vector<std::size_t>& lines) {
  std::vector<std::size_t> idx(items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return items[a] < items[b]; });
  std::vector<T> si;
  std::vector<std::size_t> sl;
  for (auto i : idx) {
    if (!si.empty() && si.back() == items[i]) continue;
    si.push_back(items[i]);
    sl.push_back(lines.empty() ? 0 : lines[i]);
  }
  items = std::move(si);
  lines = std::move(sl);
}

void normalize(StructureFile& f) {
  for (auto& [a, b] : f.involution)
    if (b < a) std::swap(a, b);
  for (auto& s : f.sections)
    if (s.z < s.y) std::swap(s.y, s.z);
  sort_with_lines(f.covers, f.cover_lines);
  sort_with_lines(f.involution, f.involution_lines);
  sort_with_lines(f.sections, f.section_lines);
}

StructureFile parse_text(std::string_view text) {
  StructureFile f;
  bool have_name = false;
  bool have_elements = false;
  std::map<std::string, Element, std::less<>> index;

  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    const auto t = tokenize(line);
    if (t.empty()) return;
    const auto kw = t.front().text;
    auto lookup = [&](const Token& tok) {
      if (!have_elements) throw ParseError(ln, tok.column, "'elements' must come before references");
      auto it = index.find(tok.text);
      if (it == index.end())
        throw ParseError(ln, tok.column, "unknown element '" + std::string(tok.text) + "'");
      return it->second;
    };
    if (kw == "name") {
      expect_args(t, ln, 1);
      if (have_name) throw ParseError(ln, t[0].column, "duplicate 'name'");
      f.name = std::string(t[1].text);
      have_name = true;
    } else if (kw == "elements") {
      if (have_elements) throw ParseError(ln, t[0].column, "duplicate 'elements'");
      if (t.size() < 2) throw ParseError(ln, t[0].column, "'elements' needs at least one label");
      if (t.size() - 1 > kMaxElements)
        throw ParseError(ln, t[0].column, "more than " + std::to_string(kMaxElements) + " elements");
      for (std::size_t i = 1; i < t.size(); ++i) {
        std::string label(t[i].text);
        if (!index.emplace(label, static_cast<Element>(i - 1)).second)
          throw ParseError(ln, t[i].column, "duplicate element '" + label + "'");
        f.elements.push_back(std::move(label));
      }
      f.elements_line = ln;
      have_elements = true;
    } else if (kw == "cover") {
      expect_args(t, ln, 2);
      f.covers.emplace_back(lookup(t[1]), lookup(t[2]));
      f.cover_lines.push_back(ln);
    } else if (kw == "inv") {
      expect_args(t, ln, 2);
      f.involution.emplace_back(lookup(t[1]), lookup(t[2]));
      f.involution_lines.push_back(ln);
    } else if (kw == "section") {
      expect_args(t, ln, 3);
      f.sections.push_back({lookup(t[1]), lookup(t[2]), lookup(t[3])});
      f.section_lines.push_back(ln);
    } else {
      throw ParseError(ln, t[0].column, "unknown statement '" + std::string(kw) + "'");
    }
  });
  if (!have_elements) throw ParseError(1, 0, "missing 'elements' line");
  normalize(f);
  return f;
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

StructureFile parse_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte points one past the offending character.
    auto [line, col] = position_of(text, e.byte ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(line, col, what);
  }
  auto fail = [](const std::string& msg) -> ParseError { return ParseError(1, 0, msg); };
  if (!j.is_object()) throw fail("top level must be an object");
  StructureFile f;
  try {
    if (j.contains("name")) f.name = j.at("name").get<std::string>();
    if (!j.contains("elements")) throw fail("missing \"elements\"");
    f.elements = j.at("elements").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
  if (f.elements.empty()) throw fail("\"elements\" is empty");
  if (f.elements.size() > kMaxElements)
    throw fail("more than " + std::to_string(kMaxElements) + " elements");
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < f.elements.size(); ++i)
    if (!index.emplace(f.elements[i], static_cast<Element>(i)).second)
      throw fail("duplicate element '" + f.elements[i] + "'");
  auto lookup = [&](const json& v) {
    if (!v.is_string()) throw fail("element references must be strings");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw fail("unknown element '" + v.get<std::string>() + "'");
    return it->second;
  };
  auto tuples = [&](const char* key, std::size_t arity) {
    std::vector<std::vector<Element>> out;
    if (!j.contains(key)) return out;
    const auto& a = j.at(key);
    if (!a.is_array()) throw fail(std::string("\"") + key + "\" must be an array");
    for (const auto& item : a) {
      if (!item.is_array() || item.size() != arity)
        throw fail(std::string("entries of \"") + key + "\" must have " + std::to_string(arity) +
                   " labels");
      std::vector<Element> t;
      for (const auto& v : item) t.push_back(lookup(v));
      out.push_back(std::move(t));
    }
    return out;
  };
  for (auto& t : tuples("covers", 2)) f.covers.emplace_back(t[0], t[1]);
  for (auto& t : tuples("involution", 2)) f.involution.emplace_back(t[0], t[1]);
  for (auto& t : tuples("sections", 3)) f.sections.push_back({t[0], t[1], t[2]});
  normalize(f);
  return f;
}

// Line of the first entry mentioning any witness element, else `fallback`.
std::size_t blame(const std::vector<ElementPair>& pairs, const std::vector<std::size_t>& lines,
                  const std::vector<Element>& witness, std::size_t fallback, bool both = false) {
  auto in = [&](Element e) { return std::find(witness.begin(), witness.end(), e) != witness.end(); };
  for (std::size_t i = 0; i < pairs.size() && i < lines.size(); ++i) {
    const bool a = in(pairs[i].first), b = in(pairs[i].second);
    if (both ? (a && b) : (a || b)) return lines[i];
  }
  return fallback;
}

[[noreturn]] void rethrow(const Error& e, std::size_t line) {
  throw ParseError(line ? line : 1, 0, e.what());
}

std::vector<Element> involution_vector(const StructureFile& f) {
  const std::size_t n = f.elements.size();
  std::vector<Element> inv(n, kNone);
  for (std::size_t i = 0; i < f.involution.size(); ++i) {
    const auto [a, b] = f.involution[i];
    const std::size_t ln = i < f.involution_lines.size() ? f.involution_lines[i] : 0;
    if ((inv[a] != kNone && inv[a] != b) || (inv[b] != kNone && inv[b] != a))
      throw ParseError(ln ? ln : 1, 0,
                       "conflicting involution for '" + f.elements[inv[a] != kNone && inv[a] != b ? a : b] +
                           "'");
    inv[a] = b;
    inv[b] = a;
  }
  for (Element x = 0; x < n; ++x)
    if (inv[x] == kNone) inv[x] = x;
  return inv;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  return looks_like_json(text) ? parse_json(text) : parse_text(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureFile load_structure(const std::filesystem::path& path) {
  return parse_structure(read_file(path));
}

std::string emit_structure(const StructureFile& f) {
  std::string out;
  const auto& e = f.elements;
  if (!f.name.empty()) out += "name " + f.name + "\n";
  out += "elements";
  for (const auto& l : e) out += " " + l;
  out += "\n";
  auto norm = f;
  normalize(norm);
  for (auto [x, y] : norm.covers) out += "cover " + e[x] + " " + e[y] + "\n";
  for (auto [x, y] : norm.involution) out += "inv " + e[x] + " " + e[y] + "\n";
  for (const auto& s : norm.sections)
    out += "section " + e[s.filter] + " " + e[s.y] + " " + e[s.z] + "\n";
  return out;
}

std::string emit_structure_json(const StructureFile& f) {
  auto norm = f;
  normalize(norm);
  const auto& e = f.elements;
  nlohmann::ordered_json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["elements"] = e;
  auto& covers = j["covers"] = nlohmann::ordered_json::array();
  for (auto [x, y] : norm.covers) covers.push_back({e[x], e[y]});
  if (norm.has_involution()) {
    auto& inv = j["involution"] = nlohmann::ordered_json::array();
    for (auto [x, y] : norm.involution) inv.push_back({e[x], e[y]});
  }
  if (norm.has_sections()) {
    auto& sec = j["sections"] = nlohmann::ordered_json::array();
    for (const auto& s : norm.sections) sec.push_back({e[s.filter], e[s.y], e[s.z]});
  }
  return j.dump(2) + "\n";
}

FinitePoset to_poset(const StructureFile& f) {
  try {
    return FinitePoset::from_covers(f.elements.size(), f.covers, f.elements);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    rethrow(e, blame(f.covers, f.cover_lines, e.witness(), f.elements_line, true));
  }
}

OrthoPoset to_ortho(const StructureFile& f) {
  auto p = to_poset(f);
  if (!f.has_involution()) throw ParseError(f.elements_line ? f.elements_line : 1, 0, "no 'inv' lines");
  auto inv = involution_vector(f);
  try {
    return OrthoPoset::make(std::move(p), std::move(inv));
  } catch (const Error& e) {
    rethrow(e, blame(f.involution, f.involution_lines, e.witness(),
                     f.involution_lines.empty() ? 0 : f.involution_lines.front()));
  }
}

SectionedPoset to_sectioned(const StructureFile& f) {
  auto p = to_poset(f);
  const std::size_t n = p.size();
  std::optional<std::vector<Element>> global;
  if (f.has_involution()) global = to_ortho(f).involution();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n, kNone));
  for (std::size_t i = 0; i < f.sections.size(); ++i) {
    const auto& s = f.sections[i];
    const std::size_t ln = i < f.section_lines.size() ? f.section_lines[i] : 0;
    auto& row = rows[s.filter];
    if ((row[s.y] != kNone && row[s.y] != s.z) || (row[s.z] != kNone && row[s.z] != s.y))
      throw ParseError(ln ? ln : 1, 0, "conflicting section entry in [" + f.elements[s.filter] + ",1]");
    row[s.y] = s.z;
    row[s.z] = s.y;
  }
  try {
    auto full = complete_sections(p, std::move(rows), global ? &*global : nullptr);
    return validate_sections(std::move(p), std::move(full));
  } catch (const Error& e) {
    std::size_t ln = f.elements_line;
    if (!e.witness().empty())
      for (std::size_t i = 0; i < f.sections.size() && i < f.section_lines.size(); ++i)
        if (f.sections[i].filter == e.witness().front()) {
          ln = f.section_lines[i];
          break;
        }
    rethrow(e, ln);
  }
}

StructureFile to_structure_file(const FinitePoset& p, std::string name) {
  StructureFile f;
  f.name = std::move(name);
  f.elements = p.labels();
  f.covers = covers(p);
  normalize(f);
  return f;
}

StructureFile to_structure_file(const OrthoPoset& o, std::string name) {
  auto f = to_structure_file(o.poset(), std::move(name));
  for (Element x = 0; x < o.size(); ++x)
    if (x <= o(x)) f.involution.emplace_back(x, o(x));
  normalize(f);
  return f;
}

StructureFile to_structure_file(const SectionedPoset& s, std::string name) {
  const auto bottom = s.bottom_section();
  auto f = to_structure_file(bottom, std::move(name));
  const auto& p = s.poset();
  for (Element x = 0; x < s.size(); ++x) {
    // [0,1] is written as the global involution; filters with at most two
    // elements have only one antitone involution.
    if (x == p.bottom() || p.up(x).size() <= 2) continue;
    for (Element y : p.up(x))
      if (y <= s.at(x, y)) f.sections.push_back({x, y, s.at(x, y)});
  }
  normalize(f);
  return f;
}

// ---------------------------------------------------------------------------

FamilyFile parse_family(std::string_view text) {
  FamilyFile f;
  bool have_name = false;
  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    const auto t = tokenize(line);
    if (t.empty()) return;
    const auto kw = t.front().text;
    if (kw == "family") {
      expect_args(t, ln, 1);
      if (have_name) throw ParseError(ln, t[0].column, "duplicate 'family'");
      f.name = std::string(t[1].text);
      have_name = true;
    } else if (kw == "block") {
      expect_args(t, ln, 2);
      for (const auto& b : f.blocks)
        if (b.name == t[1].text)
          throw ParseError(ln, t[1].column, "duplicate block '" + std::string(t[1].text) + "'");
      f.blocks.push_back({std::string(t[1].text), std::string(t[2].text), ln});
    } else if (kw == "identify") {
      expect_args(t, ln, 2);
      FamilyFile::Identify id;
      id.line = ln;
      for (int k = 0; k < 2; ++k) {
        const auto& tok = t[1 + k];
        const auto colon = tok.text.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == tok.text.size())
          throw ParseError(ln, tok.column, "expected BLOCK:element");
        auto& blk = k == 0 ? id.block_a : id.block_b;
        auto& lab = k == 0 ? id.label_a : id.label_b;
        blk = std::string(tok.text.substr(0, colon));
        lab = std::string(tok.text.substr(colon + 1));
        bool known = false;
        for (const auto& b : f.blocks) known = known || b.name == blk;
        if (!known) throw ParseError(ln, tok.column, "unknown block '" + blk + "'");
      }
      f.identifications.push_back(std::move(id));
    } else {
      throw ParseError(ln, t[0].column, "unknown statement '" + std::string(kw) + "'");
    }
  });
  if (f.blocks.empty()) throw ParseError(1, 0, "family has no blocks");
  return f;
}

PastedFamily to_family(const FamilyFile& f, const std::filesystem::path& base_dir) {
  std::vector<Block> blocks;
  for (const auto& b : f.blocks) {
    const auto path = base_dir / b.path;
    try {
      blocks.push_back({b.name, to_ortho(load_structure(path))});
    } catch (const Error& e) {
      throw ParseError(b.line, 0, "block '" + b.name + "' (" + path.string() + "): " + e.what());
    }
  }
  std::vector<Glue> glue;
  for (const auto& id : f.identifications) {
    Glue g;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
      if (f.blocks[i].name == id.block_a) g.block_a = i;
      if (f.blocks[i].name == id.block_b) g.block_b = i;
    }
    auto find = [&](std::size_t blk, const std::string& label) {
      auto e = blocks[blk].lattice.poset().find(label);
      if (!e)
        throw ParseError(id.line, 0,
                         "block '" + blocks[blk].name + "' has no element '" + label + "'");
      return *e;
    };
    g.a = find(g.block_a, id.label_a);
    g.b = find(g.block_b, id.label_b);
    glue.push_back(g);
  }
  return validate_family(std::move(blocks), std::move(glue));
}

PastedFamily load_family(const std::filesystem::path& path) {
  return to_family(parse_family(read_file(path)), path.parent_path());
}

}  // namespace qposet
