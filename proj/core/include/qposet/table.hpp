#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qposet/poset.hpp"

namespace qposet {

/// Total map P x P -> subsets of P, stored row-major. Cells are expected to
/// be nonempty for every operator the library builds.
class SetValuedTable {
 public:
  SetValuedTable() = default;
  explicit SetValuedTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  const Subset& operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  Subset& operator()(Element x, Element y) { return cells_[x * n_ + y]; }

  /// Sole member of the cell when it is a singleton.
  std::optional<Element> single(Element x, Element y) const { return (*this)(x, y).only(); }
  bool all_singletons() const {
    for (const auto& c : cells_)
      if (c.size() != 1) return false;
    return true;
  }

  friend bool operator==(const SetValuedTable&, const SetValuedTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Subset> cells_;
};

/// Single-valued operator table, e.g. (I2) and (I4).
class ElementTable {
 public:
  ElementTable() = default;
  explicit ElementTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  Element& operator()(Element x, Element y) { return cells_[x * n_ + y]; }

  SetValuedTable as_sets() const {
    SetValuedTable t(n_);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) t(x, y) = Subset::singleton((*this)(x, y));
    return t;
  }

  friend bool operator==(const ElementTable&, const ElementTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// A * B = union of T(x, y) over x in A, y in B.
inline Subset lift_table(const SetValuedTable& t, const Subset& a, const Subset& b) {
  Subset out;
  for (Element x : a)
    for (Element y : b) out |= t(x, y);
  return out;
}

inline Subset lift_table(const FinitePoset& p, const SetValuedTable& t, const Subset& a,
                         const Subset& b) {
  p.check(a);
  p.check(b);
  return lift_table(t, a, b);
}

}  // namespace qposet
