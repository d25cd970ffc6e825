#pragma once

#include "gridcds/vertex_set.hpp"

namespace gridcds {

// Fujie's two connected dominating sets; both require n, m >= 4.

/// Columns 2 and m-1, a row-2 bridge between them, and a vertical spine from
/// row 3 down in every column 3k+2, 1 <= k <= floor((m-4)/3).
[[nodiscard]] VertexSet build_d1(GridDims dims);

/// Rows 2 and n-1, a column-2 bridge between them, and a horizontal spine from
/// column 3 rightwards in every row 3k+2, 1 <= k <= floor((n-4)/3).
[[nodiscard]] VertexSet build_d2(GridDims dims);

}  // namespace gridcds
