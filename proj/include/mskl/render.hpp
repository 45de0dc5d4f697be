#pragma once

// Plain-text views of the grid objects, in the orientation used throughout:
// row 1 on top, column 1 on the left.

#include <string>

#include "mskl/diagram.hpp"
#include "mskl/permutation.hpp"

namespace mskl {

// The full region picture of a permutation, one grid row per line:
//   1  permutation matrix entry
//   *  essential cell
//   #  other diagram cell
//   +  covered cell that is not in the diagram
//   .  everything else
std::string ascii_regions(const Regions& reg);

// Just the permutation and one cell set: '1', '#', '.'.
std::string ascii_cells(const Permutation& w, const Diagram& d);

// The chart of v: '1' for the pivots, 'z' for free coordinates, '.' for
// structural zeros.
std::string ascii_chart(const Permutation& v);

// The chart of v inside the variety of w: free coordinates that the rank
// conditions force to vanish are shown as 'x'.
std::string ascii_chart(const Permutation& v, const Permutation& w);

}  // namespace mskl
