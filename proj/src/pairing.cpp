#include "dposet/pairing.hpp"

#include <algorithm>
#include <stdexcept>

namespace dposet {

Pairing standard_reduction(const OrderedBoundaryMatrix& matrix) {
  const int n = matrix.size();
  std::vector<Gf2Vector> reduced(n);
  for (int j = 0; j < n; ++j) reduced[j] = matrix.column(j);

  std::vector<int> owner(n, -1);  // pivot row -> column holding it
  Pairing out;
  out.is_death.assign(n, false);
  out.partner.assign(n, -1);

  for (int j = 0; j < n; ++j) {
    Gf2Vector& col = reduced[j];
    int low = col.highest_set();
    while (low >= 0 && owner[low] >= 0) {
      col.xor_with(reduced[owner[low]]);
      low = col.highest_set();
    }
    if (low >= 0) {
      owner[low] = j;
      int birth = matrix.cell_at(low);
      int death = matrix.cell_at(j);
      out.is_death[death] = true;
      out.partner[birth] = death;
      out.partner[death] = birth;
      out.pairs.emplace_back(birth, death);
    }
  }
  for (int pos = 0; pos < n; ++pos) {
    int cell = matrix.cell_at(pos);
    if (!out.is_death[cell] && out.partner[cell] < 0)
      out.essential.push_back(cell);
  }
  std::sort(out.essential.begin(), out.essential.end());
  return out;
}

Gf2Vector canonical_cycle(const OrderedBoundaryMatrix& matrix,
                          const Pairing& pairing, int birth_cell) {
  if (birth_cell < 0 || birth_cell >= matrix.size())
    throw std::out_of_range("cell id out of range");
  if (pairing.gives_death(birth_cell))
    throw std::invalid_argument("canonical cycle is defined for birth cells only");

  const int n = matrix.size();
  const int y = matrix.position_of(birth_cell);
  const int p = matrix.dim_at(y);

  // Echelonise the columns of earlier death cells of dimension p, tracking
  // which original death columns combine into each pivot column.
  struct Echelon {
    Gf2Vector column;
    Gf2Vector combination;  // over positions of the death cells used
  };
  std::vector<int> pivot_for_row(n, -1);
  std::vector<Echelon> echelon;
  for (int pos = 0; pos < y; ++pos) {
    if (matrix.dim_at(pos) != p || !pairing.gives_death(matrix.cell_at(pos)))
      continue;
    Echelon e{matrix.column(pos), Gf2Vector(n)};
    e.combination.set(pos);
    int low = e.column.highest_set();
    while (low >= 0 && pivot_for_row[low] >= 0) {
      const Echelon& other = echelon[pivot_for_row[low]];
      e.column.xor_with(other.column);
      e.combination.xor_with(other.combination);
      low = e.column.highest_set();
    }
    if (low < 0)
      throw std::logic_error("death columns must be linearly independent");
    pivot_for_row[low] = int(echelon.size());
    echelon.push_back(std::move(e));
  }

  Gf2Vector target = matrix.column(y);
  Gf2Vector chain(n);
  chain.set(y);
  int low = target.highest_set();
  while (low >= 0) {
    if (pivot_for_row[low] < 0)
      throw std::logic_error(
          "boundary of a birth cell must lie in the span of earlier death columns");
    const Echelon& e = echelon[pivot_for_row[low]];
    target.xor_with(e.column);
    chain.xor_with(e.combination);
    low = target.highest_set();
  }
  return chain;
}

}  // namespace dposet
