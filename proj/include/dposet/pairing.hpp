#pragma once

#include <utility>
#include <vector>

#include "dposet/matrix.hpp"

namespace dposet {

// Persistence pairing of a filtered complex. Every cell either gives birth or
// gives death; each death cell is paired with exactly one earlier birth cell,
// and the essential cells are the birth cells that never pair.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;  // (birth cell, death cell), by death value
  std::vector<int> essential;              // unpaired birth cells, by id
  std::vector<bool> is_death;              // per cell id
  std::vector<int> partner;                // per cell id, -1 when unpaired

  bool gives_birth(int cell) const { return !is_death[cell]; }
  bool gives_death(int cell) const { return is_death[cell]; }
};

// Left-to-right column reduction resolving lowest-one collisions. Works on a
// scratch copy of the columns; the input matrix is not modified.
Pairing standard_reduction(const OrderedBoundaryMatrix& matrix);

// The unique cycle d_y = y + c_y where c_y is supported on death cells below
// y and has the same boundary as y. Returned as a bit set over matrix
// positions. Throws std::invalid_argument when y gives death.
Gf2Vector canonical_cycle(const OrderedBoundaryMatrix& matrix,
                          const Pairing& pairing, int birth_cell);

}  // namespace dposet
