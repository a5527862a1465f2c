#include "dposet/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dposet {

bool OrderedBoundaryMatrix::entry(int row, int col) const {
  if (row < 0 || row >= size() || col < 0 || col >= size())
    throw std::out_of_range("matrix position out of range");
  return cols_[col].test(row);
}

bool OrderedBoundaryMatrix::zero() const {
  for (const auto& c : cols_)
    if (c.any()) return false;
  return true;
}

void OrderedBoundaryMatrix::add_column(int from, int to) {
  if (from < 0 || from >= size() || to < 0 || to >= size())
    throw std::out_of_range("column position out of range");
  if (from == to) throw std::invalid_argument("cannot add a column to itself");
  for (int x : cols_[from].set_bits()) rows_[x].flip(to);
  cols_[to].xor_with(cols_[from]);
}

void OrderedBoundaryMatrix::add_row(int from, int to) {
  if (from < 0 || from >= size() || to < 0 || to >= size())
    throw std::out_of_range("row position out of range");
  if (from == to) throw std::invalid_argument("cannot add a row to itself");
  for (int y : rows_[from].set_bits()) cols_[y].flip(to);
  rows_[to].xor_with(rows_[from]);
}

void OrderedBoundaryMatrix::erase_cell(int pos) {
  if (pos < 0 || pos >= size()) throw std::out_of_range("position out of range");
  for (int x : cols_[pos].set_bits()) rows_[x].reset(pos);
  cols_[pos].clear();
  for (int y : rows_[pos].set_bits()) cols_[y].reset(pos);
  rows_[pos].clear();
  alive_[pos] = false;
}

int OrderedBoundaryMatrix::last_nonzero_row() const {
  for (int r = size() - 1; r >= 0; --r)
    if (rows_[r].any()) return r;
  return -1;
}

int OrderedBoundaryMatrix::first_nonzero_column() const {
  for (int c = 0; c < size(); ++c)
    if (cols_[c].any()) return c;
  return -1;
}

OrderedBoundaryMatrix build_matrix(const LefschetzComplex& complex,
                                   const Filter& filter) {
  require_valid(complex, filter);
  const int n = complex.size();

  OrderedBoundaryMatrix m;
  m.cell_at_.resize(n);
  std::iota(m.cell_at_.begin(), m.cell_at_.end(), 0);
  std::sort(m.cell_at_.begin(), m.cell_at_.end(), [&](int a, int b) {
    return filter.value(a) < filter.value(b);
  });

  m.position_of_.resize(n);
  m.dim_at_.resize(n);
  m.value_at_.resize(n);
  m.label_at_.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    int c = m.cell_at_[pos];
    m.position_of_[c] = pos;
    m.dim_at_[pos] = complex.cell(c).dim;
    m.value_at_[pos] = filter.value(c);
    m.label_at_[pos] = complex.display_name(c);
  }

  m.cols_.assign(n, Gf2Vector(n));
  m.rows_.assign(n, Gf2Vector(n));
  m.alive_.assign(n, true);
  for (int y = 0; y < n; ++y) {
    int col = m.position_of_[y];
    for (int x : complex.facets(y)) {
      int row = m.position_of_[x];
      m.cols_[col].set(row);
      m.rows_[row].set(col);
    }
  }
  return m;
}

int minor_rank(const OrderedBoundaryMatrix& matrix, int s, int t) {
  const int n = matrix.size();
  if (s >= n || t < 0) return 0;  // empty minor
  s = std::max(s, 0);
  t = std::min(t, n - 1);
  std::vector<Gf2Vector> columns;
  columns.reserve(t + 1);
  for (int j = 0; j <= t; ++j) {
    Gf2Vector col = matrix.column(j);
    for (int r = 0; r < s; ++r) col.reset(r);
    columns.push_back(std::move(col));
  }
  return gf2_rank(std::move(columns));
}

bool is_birth_death_by_ranks(const OrderedBoundaryMatrix& matrix, int s, int t) {
  if (s < 0 || s >= matrix.size() || t < 0 || t >= matrix.size())
    throw std::out_of_range("position out of range");
  const int sum = minor_rank(matrix, s, t) - minor_rank(matrix, s, t - 1) -
                  minor_rank(matrix, s + 1, t) + minor_rank(matrix, s + 1, t - 1);
  return sum > 0;
}

}  // namespace dposet
