#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dposet {

struct Cell {
  int id = 0;
  int dim = 0;
  std::string label;  // optional; empty means unnamed
};

// A structural defect found by validate_complex. `facet`/`cofacet` name the
// offending cell pair; for the composition condition they are the endpoints
// x, z whose two-step incidence count is odd.
struct Violation {
  int facet = -1;
  int cofacet = -1;
  std::string message;
};

// Finite set of cells with dimensions and a mod-2 incidence relation, stored
// in both directions so facet and cofacet queries are O(degree).
// Construction checks only indexability (dense ids, dims >= 0, incidence
// references in range); the incidence axioms are the job of
// validate_complex, so defective complexes can be represented and reported.
class LefschetzComplex {
 public:
  LefschetzComplex() = default;
  LefschetzComplex(std::vector<Cell> cells,
                   const std::vector<std::pair<int, int>>& incidences);

  int size() const { return int(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  int dim() const;  // max cell dimension, -1 when empty

  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int id) const { return cells_[id]; }
  const std::vector<int>& facets(int id) const { return facets_[id]; }
  const std::vector<int>& cofacets(int id) const { return cofacets_[id]; }
  bool incident(int facet, int cofacet) const;

  std::vector<std::pair<int, int>> incidence_pairs() const;
  int incidence_count() const;

  // Label when present, "#id" otherwise.
  std::string display_name(int id) const;

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
};

// Empty iff the dimension condition (facets sit one dimension below their
// cofacets) and the mod-2 composition condition hold.
std::vector<Violation> validate_complex(const LefschetzComplex& complex);

// Builds the complex of a simplicial complex given by vertex-id sets; missing
// faces are completed automatically. Throws std::invalid_argument naming the
// index of a duplicate simplex.
LefschetzComplex from_simplicial(const std::vector<std::vector<int>>& simplices);

struct BettiVector {
  std::vector<int> ranks;  // indexed by dimension 0..dim
  bool operator==(const BettiVector&) const = default;
};

// Mod-2 homology ranks per dimension.
BettiVector betti(const LefschetzComplex& complex);

}  // namespace dposet
