#pragma once

#include <cstddef>

#include "qposet/amalgam.hpp"
#include "qposet/ortho.hpp"

namespace qposet {

/// n-element chain with the order-reversing involution.
OrthoPoset chain(std::size_t n);

/// Boolean algebra of subsets of `atoms` atoms; element i is the bitmask i.
/// Labels: "0", "1", and otherwise the letters of the atoms in the set.
OrthoPoset boolean_algebra(std::size_t atoms);

/// The six-element hexagon 0 < x < y < 1, 0 < y' < x' < 1.
OrthoPoset benzene();

/// n eight-element Boolean blocks arranged in a cycle. Block i has atoms
/// a{i-1}, a{i}, e{i} (indices mod n, 1-based), so consecutive blocks share
/// {0, a, a', 1}. For n >= 3 this is one atomic loop of order n.
PastedFamily greechie_cycle(std::size_t n);

/// Same blocks as greechie_cycle(n+1) with the last link cut: a loop-free path.
PastedFamily greechie_path(std::size_t n);

}  // namespace qposet
