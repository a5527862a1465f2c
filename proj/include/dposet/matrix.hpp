#pragma once

#include <string>
#include <vector>

#include "dposet/complex.hpp"
#include "dposet/filter.hpp"
#include "dposet/gf2.hpp"

namespace dposet {

// Boundary matrix with rows and columns sorted by filter value. Entry (i, j)
// is 1 iff the cell at position i is a facet of the cell at position j, so
// the matrix is strictly upper triangular in position order. Column and row
// views are mirrored bit sets and stay consistent through every operation.
// Reductions retire cells with tombstone flags; positions never shift.
class OrderedBoundaryMatrix {
 public:
  OrderedBoundaryMatrix() = default;

  int size() const { return int(cols_.size()); }
  bool entry(int row, int col) const;
  bool zero() const;

  const Gf2Vector& column(int pos) const { return cols_[pos]; }
  const Gf2Vector& row(int pos) const { return rows_[pos]; }

  int cell_at(int pos) const { return cell_at_[pos]; }
  int position_of(int cell) const { return position_of_[cell]; }
  int dim_at(int pos) const { return dim_at_[pos]; }
  double value_at(int pos) const { return value_at_[pos]; }
  const std::string& label_at(int pos) const { return label_at_[pos]; }
  bool alive(int pos) const { return alive_[pos]; }

  // GF(2) column addition `from` into `to`; mirror kept consistent.
  // Throws on out-of-range positions or from == to.
  void add_column(int from, int to);
  void add_row(int from, int to);

  // Zeroes row and column of the cell at `pos` and marks it retired.
  void erase_cell(int pos);

  // Position of the bottom-most nonzero row / leftmost nonzero column among
  // live positions, -1 when the matrix is zero.
  int last_nonzero_row() const;
  int first_nonzero_column() const;

 private:
  friend OrderedBoundaryMatrix build_matrix(const LefschetzComplex&,
                                            const Filter&);
  std::vector<Gf2Vector> cols_;
  std::vector<Gf2Vector> rows_;
  std::vector<int> cell_at_;
  std::vector<int> position_of_;
  std::vector<int> dim_at_;
  std::vector<double> value_at_;
  std::vector<std::string> label_at_;
  std::vector<bool> alive_;
};

// Requires a valid complex/filter pair (throws std::invalid_argument
// otherwise).
OrderedBoundaryMatrix build_matrix(const LefschetzComplex& complex,
                                   const Filter& filter);

// Rank of the minor spanned by rows >= s and columns <= t, computed on a
// scratch copy. Out-of-range s or t denote empty minors of rank 0.
int minor_rank(const OrderedBoundaryMatrix& matrix, int s, int t);

// Rank criterion: positive alternating sum of the four lower-left minor
// ranks around (s, t) characterises the persistence pairing.
bool is_birth_death_by_ranks(const OrderedBoundaryMatrix& matrix, int s, int t);

}  // namespace dposet
