#include "dposet/gf2.hpp"

namespace dposet {

int gf2_rank(std::vector<Gf2Vector> columns) {
  if (columns.empty()) return 0;
  // Elimination keyed by the greatest set bit of each surviving column.
  std::vector<int> owner(columns[0].bits(), -1);
  int rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Gf2Vector& col = columns[j];
    while (col.any()) {
      int low = col.highest_set();
      if (owner[low] < 0) {
        owner[low] = int(j);
        ++rank;
        break;
      }
      col.xor_with(columns[owner[low]]);
    }
  }
  return rank;
}

}  // namespace dposet
