#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dposet/matrix.hpp"
#include "dposet/pairing.hpp"

namespace dposet {

struct BirthDeathPair {
  int birth = -1;        // birth cell id
  int death = -1;        // death cell id
  int dim = 0;           // dimension of the birth cell
  double birth_value = 0.0;
  double death_value = 0.0;

  double persistence() const { return death_value - birth_value; }
  bool operator==(const BirthDeathPair&) const = default;
};

// Pairing as a list of BirthDeathPair, sorted by birth value ascending. This
// ordering is the canonical element indexing used everywhere below.
std::vector<BirthDeathPair> pairing_to_pairs(const Pairing& pairing,
                                             const LefschetzComplex& complex,
                                             const Filter& filter);

// Strict partial order on birth-death pairs, stored as the transitive
// closure plus the derived transitive reduction. Relations hold only between
// pairs of equal dimension, and every related pair of intervals is nested.
struct DepthPoset {
  std::vector<BirthDeathPair> elements;       // sorted by birth value
  std::vector<std::pair<int, int>> closure;   // element-index pairs, sorted
  std::vector<std::pair<int, int>> hasse;     // transitive reduction, sorted

  bool related(int i, int j) const;
};

// Closes `relations` transitively over `elements` and checks the poset
// invariants (acyclicity, nesting, equal dimensions); throws
// std::logic_error on violation.
DepthPoset make_poset(std::vector<BirthDeathPair> elements,
                      std::vector<std::pair<int, int>> relations);

// One pass of reduction: the cancellation order it visits plus the book of
// (pivot cell, updated cell) records accumulated along the way.
struct ReductionResult {
  std::vector<BirthDeathPair> order;
  std::vector<std::pair<int, int>> book;  // cell-id pairs, deduplicated
};

using ReductionObserver = std::function<void(const OrderedBoundaryMatrix&)>;

// Bottom-to-top column reduction with clearing. Pivots at the leftmost one of
// the bottom-most nonzero row, cancels it with column additions recorded as
// (death column cell, updated column cell), retires the pivot's row/column,
// and repeats until the matrix is zero. Visits pairs by strictly decreasing
// birth value. The observer, when set, runs after every iteration.
ReductionResult reduce_alpha(OrderedBoundaryMatrix matrix,
                             const ReductionObserver& observer = {});

// Mirror image: pivots at the lowest one of the leftmost nonzero column,
// cancels with upward row additions recorded as (birth row cell, updated row
// cell), and visits pairs by strictly increasing death value.
ReductionResult reduce_omega(OrderedBoundaryMatrix matrix,
                             const ReductionObserver& observer = {});

// Runs both reductions, translates the books into pair-level relations via
// the completed pairing, and closes. Book entries that point at unpaired
// cells index no pair and contribute nothing; entries pointing at a paired
// cell of the wrong role indicate a broken reduction and throw.
DepthPoset build_depth_poset(const LefschetzComplex& complex,
                             const Filter& filter);

// Pairs sorted by persistence; ties broken by birth value, then birth id.
std::vector<BirthDeathPair> order_pi(const Pairing& pairing,
                                     const LefschetzComplex& complex,
                                     const Filter& filter);

// True iff no closure relation (i, j) places j before i in `order`. The order
// must be a permutation of the poset elements (std::invalid_argument
// otherwise).
bool is_linear_extension(const DepthPoset& poset,
                         const std::vector<BirthDeathPair>& order);

// Partition by the dimension of the pairs; entry p holds the subposet of
// dimension-p pairs. Empty list for an empty poset.
std::vector<DepthPoset> split_by_dimension(const DepthPoset& poset);

}  // namespace dposet
