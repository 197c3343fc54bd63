#pragma once

#include <string>
#include <vector>

#include "qposet/io.hpp"

namespace qposet::test {

inline std::string fixture(const std::string& name) { return std::string(QPOSET_FIXTURES) + "/" + name; }

inline FinitePoset poset(const std::string& name) { return to_poset(load_structure(fixture(name + ".poset"))); }
inline OrthoPoset ortho(const std::string& name) { return to_ortho(load_structure(fixture(name + ".poset"))); }
inline SectionedPoset sectioned(const std::string& name) {
  return to_sectioned(load_structure(fixture(name + ".poset")));
}
inline PastedFamily family(const std::string& name) { return load_family(fixture(name + ".family")); }

/// Element by label; fails loudly on typos.
inline Element el(const FinitePoset& p, const std::string& label) {
  auto e = p.find(label);
  if (!e) throw std::runtime_error("no element '" + label + "'");
  return *e;
}
inline Element el(const OrthoPoset& o, const std::string& label) { return el(o.poset(), label); }

inline Subset set(const FinitePoset& p, const std::vector<std::string>& labels) {
  Subset s;
  for (const auto& l : labels) s.insert(el(p, l));
  return s;
}

inline std::vector<Element> elems(const FinitePoset& p, const std::vector<std::string>& labels) {
  std::vector<Element> v;
  for (const auto& l : labels) v.push_back(el(p, l));
  return v;
}

inline const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> n = {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b",
                                             "fig3",  "fig4",  "fig5",  "fig7",  "fig8"};
  return n;
}

}  // namespace qposet::test
