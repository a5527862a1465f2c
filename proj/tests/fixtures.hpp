#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dposet/cancellation.hpp"
#include "dposet/complex.hpp"
#include "dposet/depth_poset.hpp"
#include "dposet/filter.hpp"
#include "dposet/matrix.hpp"
#include "dposet/pairing.hpp"

namespace fixtures {

using namespace dposet;

struct NamedInstance {
  LefschetzComplex complex;
  Filter filter;

  int id(const std::string& label) const {
    for (const Cell& c : complex.cells())
      if (c.label == label) return c.id;
    throw std::invalid_argument("no cell labeled " + label);
  }
  std::pair<double, double> values(const std::string& birth,
                                   const std::string& death) const {
    return {filter.value(id(birth)), filter.value(id(death))};
  }
};

// Height function on a circle with eight minima a..h (vertices) and eight
// maxima A..H (edges), edge X spanning the two vertices beside it. Heights
// are chosen so the minima rank a<g<c<b<f<d<e<h and the maxima B<C<F<E<D<G<H<A.
inline NamedInstance circle() {
  std::vector<Cell> cells;
  const char* vertex_names = "abcdefgh";
  for (int i = 0; i < 8; ++i)
    cells.push_back({i, 0, std::string(1, vertex_names[i])});
  const char* edge_names = "ABCDEFGH";
  for (int i = 0; i < 8; ++i)
    cells.push_back({8 + i, 1, std::string(1, edge_names[i])});

  std::vector<std::pair<int, int>> incidences;
  for (int i = 0; i < 8; ++i) {  // edge A=8 spans vertices a=0, b=1, etc.
    incidences.emplace_back(i, 8 + i);
    incidences.emplace_back((i + 1) % 8, 8 + i);
  }

  std::vector<double> values(16);
  auto set = [&](const char* name, double v) {
    for (const Cell& c : cells)
      if (c.label == name) values[c.id] = v;
  };
  set("a", 1), set("g", 2), set("c", 3), set("b", 4);
  set("f", 5), set("d", 6), set("e", 7), set("h", 8);
  set("B", 9), set("C", 10), set("F", 11), set("E", 12);
  set("D", 13), set("G", 14), set("H", 15), set("A", 16);

  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// Cylinder cut along AB with a dunce hat glued to the boundary circle AA
// three times: the 2-cell Dh has the single facet AA mod 2.
inline NamedInstance dunce_hat() {
  std::vector<Cell> cells{{0, 0, "A"},  {1, 0, "B"},   {2, 1, "AA"}, {3, 1, "BB"},
                          {4, 1, "AB"}, {5, 2, "Cyl"}, {6, 2, "Dh"}};
  std::vector<std::pair<int, int>> incidences{
      {0, 4}, {1, 4},          // AB spans A, B
      {2, 5}, {3, 5},          // Cyl bounded by AA + BB
      {2, 6}};                 // Dh bounded by AA
  std::vector<double> values{0, 1, 2, 3, 4, 5, 6};
  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// Two disjoint edges; the two pairs have disjoint intervals and no shared
// incidences, and both have persistence 1.
inline NamedInstance two_independent_pairs() {
  std::vector<Cell> cells{{0, 0, "u1"}, {1, 0, "u2"}, {2, 1, "e1"},
                          {3, 0, "w1"}, {4, 0, "w2"}, {5, 1, "e2"}};
  std::vector<std::pair<int, int>> incidences{{0, 2}, {1, 2}, {3, 5}, {4, 5}};
  std::vector<double> values{0, 1, 2, 10, 11, 12};
  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// Two vertices joined by two parallel edges (a circle made of two arcs). The
// late edge gives birth and stays essential.
inline NamedInstance parallel_edges() {
  std::vector<Cell> cells{{0, 0, "u"}, {1, 0, "s"}, {2, 1, "e"}, {3, 1, "y"}};
  std::vector<std::pair<int, int>> incidences{{0, 2}, {1, 2}, {0, 3}, {1, 3}};
  std::vector<double> values{0, 1, 2, 3};
  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// ---- independent test oracles ----------------------------------------

// Dense GF(2) elimination over bool rows; no shared code with the library's
// rank routine.
inline int naive_rank(std::vector<std::vector<bool>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && !m[pivot][col]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || !m[r][col]) continue;
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] ^ m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Lower-left minor (rows >= s, cols <= t) as a dense bool matrix.
inline int naive_minor_rank(const OrderedBoundaryMatrix& matrix, int s, int t) {
  const int n = matrix.size();
  if (s >= n || t < 0) return 0;
  s = std::max(s, 0);
  t = std::min(t, n - 1);
  std::vector<std::vector<bool>> m(n - s, std::vector<bool>(t + 1, false));
  for (int r = s; r < n; ++r)
    for (int c = 0; c <= t; ++c) m[r - s][c] = matrix.entry(r, c);
  return naive_rank(std::move(m));
}

// Direct incidence rewrite: out(x,y) = in(x,y) + in(s,y) * in(x,t), cells s
// and t removed. Independent of the library's column-operation route.
inline NamedInstance naive_cancel(const NamedInstance& inst, int s, int t) {
  const LefschetzComplex& X = inst.complex;
  std::vector<int> new_id(X.size(), -1);
  std::vector<Cell> cells;
  std::vector<double> values;
  for (const Cell& c : X.cells()) {
    if (c.id == s || c.id == t) continue;
    new_id[c.id] = int(cells.size());
    cells.push_back({int(cells.size()), c.dim, c.label});
    values.push_back(inst.filter.value(c.id));
  }
  std::vector<std::pair<int, int>> incidences;
  for (int y = 0; y < X.size(); ++y) {
    if (new_id[y] < 0) continue;
    for (int x = 0; x < X.size(); ++x) {
      if (new_id[x] < 0) continue;
      bool entry = X.incident(x, y) ^ (X.incident(s, y) && X.incident(x, t));
      if (entry) incidences.emplace_back(new_id[x], new_id[y]);
    }
  }
  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// Row-operation route for the same quotient: every facet of t absorbs the
// cofacets of s, then s and t are dropped.
inline NamedInstance row_route_cancel(const NamedInstance& inst, int s, int t) {
  const LefschetzComplex& X = inst.complex;
  std::vector<std::set<int>> cofacets(X.size());
  for (int x = 0; x < X.size(); ++x) {
    const auto& co = X.cofacets(x);
    cofacets[x].insert(co.begin(), co.end());
  }
  const std::set<int> row_s = cofacets[s];
  for (int x : X.facets(t)) {
    if (x == s) continue;
    for (int y : row_s) {
      auto [it, inserted] = cofacets[x].insert(y);
      if (!inserted) cofacets[x].erase(it);
    }
  }
  std::vector<int> new_id(X.size(), -1);
  std::vector<Cell> cells;
  std::vector<double> values;
  for (const Cell& c : X.cells()) {
    if (c.id == s || c.id == t) continue;
    new_id[c.id] = int(cells.size());
    cells.push_back({int(cells.size()), c.dim, c.label});
    values.push_back(inst.filter.value(c.id));
  }
  std::vector<std::pair<int, int>> incidences;
  for (int x = 0; x < X.size(); ++x) {
    if (new_id[x] < 0) continue;
    for (int y : cofacets[x])
      if (new_id[y] >= 0) incidences.emplace_back(new_id[x], new_id[y]);
  }
  return {LefschetzComplex(std::move(cells), incidences), Filter(values)};
}

// Id-independent description of a filtered complex: cells by value with dim,
// incidences as value pairs.
inline std::string signature(const LefschetzComplex& complex,
                             const Filter& filter) {
  std::vector<int> by_value(complex.size());
  for (int i = 0; i < complex.size(); ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(),
            [&](int a, int b) { return filter.value(a) < filter.value(b); });
  std::ostringstream out;
  out.precision(17);
  for (int c : by_value)
    out << complex.cell(c).dim << '@' << filter.value(c) << '|'
        << complex.cell(c).label << ';';
  std::set<std::pair<double, double>> edges;
  for (auto [x, y] : complex.incidence_pairs())
    edges.insert({filter.value(x), filter.value(y)});
  for (auto [a, b] : edges) out << a << '<' << b << ';';
  return out.str();
}

inline std::string signature(const NamedInstance& inst) {
  return signature(inst.complex, inst.filter);
}
inline std::string signature(const Quotient& q) {
  return signature(q.complex, q.filter);
}

inline std::set<std::pair<double, double>> pair_value_set(
    const LefschetzComplex& complex, const Filter& filter) {
  std::set<std::pair<double, double>> out;
  Pairing p = standard_reduction(build_matrix(complex, filter));
  for (auto [b, d] : p.pairs) out.insert({filter.value(b), filter.value(d)});
  return out;
}

inline std::set<std::pair<double, double>> shallow_value_set(
    const LefschetzComplex& complex, const Filter& filter) {
  std::set<std::pair<double, double>> out;
  for (const ShallowPair& p : shallow_pairs(complex, filter))
    out.insert({filter.value(p.birth), filter.value(p.death)});
  return out;
}

// Homology comparison: the vectors may differ in length when a cancellation
// removes the last cells of the top dimension, so compare zero-padded.
inline bool same_homology(const BettiVector& a, const BettiVector& b) {
  const std::size_t n = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t p = 0; p < n; ++p) {
    int ra = p < a.ranks.size() ? a.ranks[p] : 0;
    int rb = p < b.ranks.size() ? b.ranks[p] : 0;
    if (ra != rb) return false;
  }
  return true;
}

// Small deterministic generator for property tests.
struct TestRng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return int(next() % std::uint64_t(n)); }
};

}  // namespace fixtures
