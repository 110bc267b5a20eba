#pragma once

#include "catdias/support.hpp"

#include <string>

namespace catdias {

// Figures of supports as grids of cells.
//
// One axis: a single row. Two axes: the first axis runs down the rows, the
// second across the columns, so {a >= b} draws lower-triangular. Three or
// more axes: one (axis 0 across, axis 1 down) grid per value of the
// remaining coordinates, in lexicographic order; for S_{m;i}^n this is one
// (gamma, mu) slice per nu.

std::size_t slice_count(const Support& s);

// '#' for a point of the support, '.' otherwise.
std::string render_ascii(const Support& s);

// Standalone SVG 1.1 document.
std::string render_svg(const Support& s);

} // namespace catdias
