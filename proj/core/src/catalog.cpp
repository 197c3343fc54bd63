#include "qposet/catalog.hpp"

#include <string>

#include "qposet/error.hpp"

namespace qposet {

OrthoPoset chain(std::size_t n) {
  std::vector<ElementPair> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  auto p = FinitePoset::from_covers(n, covers);
  std::vector<Element> inv(n);
  for (Element i = 0; i < n; ++i) inv[i] = static_cast<Element>(n - 1 - i);
  return OrthoPoset::make(std::move(p), std::move(inv));
}

OrthoPoset boolean_algebra(std::size_t atoms) {
  if (atoms > 8) throw Error(ErrorKind::TooManyElements, "at most 8 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<Subset> above(n);
  std::vector<std::string> labels(n);
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      if ((x & y) == x) above[x].insert(y);
    inv[x] = static_cast<Element>((n - 1) ^ x);
    if (x == 0) {
      labels[x] = "0";
    } else if (x == n - 1) {
      labels[x] = "1";
    } else {
      for (std::size_t k = 0; k < atoms; ++k)
        if (x >> k & 1U) labels[x] += static_cast<char>('a' + k);
    }
  }
  return OrthoPoset::make(FinitePoset::from_relation(std::move(above), std::move(labels)),
                          std::move(inv));
}

OrthoPoset benzene() {
  // 0 x y' y x' 1
  const std::vector<ElementPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
  auto p = FinitePoset::from_covers(6, covers, {"0", "x", "y'", "y", "x'", "1"});
  return OrthoPoset::make(std::move(p), {5, 4, 3, 2, 1, 0});
}

namespace {

// Eight-element Boolean block with atoms p, q, r listed as
// 0 p q r p' q' r' 1, where p' = q ∨ r and so on.
OrthoPoset cube(const std::string& p, const std::string& q, const std::string& r) {
  const std::vector<ElementPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 5}, {1, 6}, {2, 4},
                                        {2, 6}, {3, 4}, {3, 5}, {4, 7}, {5, 7}, {6, 7}};
  auto poset = FinitePoset::from_covers(8, covers, {"0", p, q, r, p + "'", q + "'", r + "'", "1"});
  return OrthoPoset::make(std::move(poset), {7, 4, 5, 6, 1, 2, 3, 0});
}

PastedFamily cube_family(std::size_t blocks, bool closed) {
  std::vector<Block> bs;
  std::vector<Glue> glue;
  for (std::size_t i = 1; i <= blocks; ++i) {
    const std::size_t prev = closed && i == 1 ? blocks : i - 1;
    bs.push_back({"K" + std::to_string(i),
                  cube("a" + std::to_string(prev), "a" + std::to_string(i), "e" + std::to_string(i))});
  }
  // Block i holds the link to block i+1 in slot q (element 2, complement 5);
  // block i+1 holds it in slot p (element 1, complement 4).
  const std::size_t links = closed ? blocks : blocks - 1;
  for (std::size_t i = 0; i < links; ++i) {
    const std::size_t j = (i + 1) % blocks;
    glue.push_back({i, 2, j, 1});
    glue.push_back({i, 5, j, 4});
  }
  return validate_family(std::move(bs), std::move(glue));
}

}  // namespace

PastedFamily greechie_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidGlue, "a cycle needs at least three blocks");
  return cube_family(n, true);
}

PastedFamily greechie_path(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidGlue, "a path needs at least one block");
  return cube_family(n, false);
}

}  // namespace qposet
