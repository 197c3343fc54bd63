#include "qposet/render.hpp"

#include <algorithm>

namespace qposet {

namespace {

std::string pad(std::string s, std::size_t width) {
  // Labels may hold multi-byte characters; pad by code points.
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  if (len < width) s.append(width - len, ' ');
  return s;
}

std::size_t display_width(const std::string& s) {
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  return len;
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Length of the longest chain from the bottom to each element.
std::vector<std::size_t> heights(const FinitePoset& p) {
  const auto cs = covers(p);
  std::vector<Element> order(p.size());
  for (Element x = 0; x < p.size(); ++x) order[x] = x;
  // Sorting by the size of the principal ideal is a linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return p.down(a).size() < p.down(b).size(); });
  std::vector<std::size_t> h(p.size(), 0);
  for (Element y : order)
    for (auto [a, b] : cs)
      if (b == y) h[y] = std::max(h[y], h[a] + 1);
  return h;
}

std::string dot(const FinitePoset& p, std::string_view name, const std::vector<Element>* inv,
                const std::vector<std::string>* extra) {
  std::string out = "digraph " + quote(name) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=plaintext];\n";
  for (Element x = 0; x < p.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=" + quote(p.label(x));
    if (inv) out += ", involution=" + quote(p.label((*inv)[x]));
    if (extra) out += ", blocks=" + quote((*extra)[x]);
    out += "];\n";
  }
  const auto h = heights(p);
  const std::size_t top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  for (std::size_t level = 0; level <= top; ++level) {
    std::string row;
    for (Element x = 0; x < p.size(); ++x)
      if (h[x] == level) row += " n" + std::to_string(x) + ";";
    if (!row.empty()) out += "  { rank=same;" + row + " }\n";
  }
  for (auto [a, b] : covers(p))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace

std::string render_table(const FinitePoset& p, const SetValuedTable& t, std::string_view corner) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = std::string(corner);
  for (Element x = 0; x < n; ++x) {
    cells[0][x + 1] = p.label(x);
    cells[x + 1][0] = p.label(x);
    for (Element y = 0; y < n; ++y) cells[x + 1][y + 1] = p.format(t(x, y), false);
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], display_width(row[c]));

  std::string out;
  for (std::size_t r = 0; r <= n; ++r) {
    std::string line = pad(cells[r][0], width[0]) + " |";
    for (std::size_t c = 1; c <= n; ++c) line += " " + pad(cells[r][c], width[c] + 1);
    rtrim(line);
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 1; c <= n; ++c) total += width[c] + 2;
      out += std::string(width[0] + 1, '-') + "+" + std::string(total, '-') + "\n";
    }
  }
  return out;
}

std::string render_table(const FinitePoset& p, const ElementTable& t, std::string_view corner) {
  return render_table(p, t.as_sets(), corner);
}

std::string export_dot(const FinitePoset& p, std::string_view name, const std::vector<Element>* involution) {
  return dot(p, name, involution, nullptr);
}

std::string export_dot(const OrthoPoset& o, std::string_view name) {
  return dot(o.poset(), name, &o.involution(), nullptr);
}

std::string export_dot(const PastedFamily& f, const AtomicAmalgam& a, std::string_view name) {
  std::vector<std::string> blocks(a.carrier.size());
  for (Element x = 0; x < a.carrier.size(); ++x) {
    for (auto i : a.origin[x]) {
      if (!blocks[x].empty()) blocks[x] += ",";
      blocks[x] += f.blocks()[i].name;
    }
  }
  return dot(a.carrier.poset(), name, &a.carrier.involution(), &blocks);
}

}  // namespace qposet
