#pragma once

#include <utility>
#include <vector>

#include "dposet/complex.hpp"
#include "dposet/filter.hpp"

namespace dposet {

// Incident pair where the birth cell is the last facet of the death cell and
// the death cell is the first cofacet of the birth cell.
struct ShallowPair {
  int birth = -1;
  int death = -1;
  bool operator==(const ShallowPair&) const = default;
};

bool is_shallow(const LefschetzComplex& complex, const Filter& filter, int s,
                int t);

// All shallow pairs, sorted by birth value. Each cell belongs to at most one.
std::vector<ShallowPair> shallow_pairs(const LefschetzComplex& complex,
                                       const Filter& filter);

// Complex and filter after a cancellation. Cells are re-indexed densely but
// keep their labels and filter values, so cells stay identifiable across
// quotients by value.
struct Quotient {
  LefschetzComplex complex;
  Filter filter;
};

// Removes the facet-cofacet pair (s, t) and rewrites the incidence relation:
// every cofacet of s other than t absorbs the facets of t. Requires s to be
// a facet of t, nothing more. The restricted filter is returned as data; it
// is guaranteed monotone on the quotient only when the pair was shallow.
Quotient cancel(const LefschetzComplex& complex, const Filter& filter, int s,
                int t);

// Cancellation restricted to shallow pairs. With debug_check set, verifies
// the cubic-cost postconditions: the birth-death pairs of the quotient are
// exactly the previous ones minus `pair`, and every other previously shallow
// pair is still shallow.
Quotient cancel_shallow(const LefschetzComplex& complex, const Filter& filter,
                        ShallowPair pair, bool debug_check = false);

struct CancelSequenceResult {
  bool ok = false;
  int failed_index = -1;  // first pair (0-based) not shallow at its turn
  Quotient state;         // final quotient on success, last good state on failure
};

// Cancels `pairs` in order, requiring each to be shallow at its turn. Pairs
// are given as cell ids of the original complex and located in intermediate
// quotients by filter value.
CancelSequenceResult cancel_sequence(const LefschetzComplex& complex,
                                     const Filter& filter,
                                     const std::vector<ShallowPair>& pairs);

// Cell id with the given filter value, -1 when absent. Values survive
// quotients bit-exactly, so this recovers a cell across cancellations.
int find_cell_by_value(const Filter& filter, double value);

}  // namespace dposet
