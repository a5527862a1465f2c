#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dposet/cancellation.hpp"
#include "dposet/depth_poset.hpp"

namespace dposet {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every complete cancellation schedule in which each pair is shallow at its
// turn. Orders are index sequences into `pairs`, which is the pairing of the
// input sorted by birth value.
struct ShallowOrderEnumeration {
  std::vector<BirthDeathPair> pairs;
  std::vector<std::vector<int>> orders;
  bool cap_exceeded = false;
};

// Depth-first search over quotients, branching on each currently shallow
// pair. States reached by canceling the same pair set share one quotient, so
// the search memoizes completions per canceled set. Exhaustive when
// cap_exceeded is false; never truncates silently.
ShallowOrderEnumeration enumerate_shallow_orders(const LefschetzComplex& complex,
                                                 const Filter& filter,
                                                 std::size_t cap = 100000);

// Ground-truth poset: the intersection of all enumerated shallow orders.
// Throws CapExceeded when the enumeration does.
DepthPoset brute_depth_poset(const LefschetzComplex& complex,
                             const Filter& filter, std::size_t cap = 100000);

// All linear extensions of `poset` as index sequences, by backtracking over
// minimal elements. Throws CapExceeded beyond `cap`.
std::vector<std::vector<int>> linear_extensions(const DepthPoset& poset,
                                                std::size_t cap = 100000);

// Deterministic random instance: a flag complex on an Erdos-Renyi graph,
// truncated at `dim`, with an injective facet-monotone filter. The filter
// starts from uniform draws and is repaired by swapping the values of
// violating facet-cofacet pairs until monotone.
std::pair<LefschetzComplex, Filter> random_filtered_complex(std::uint64_t seed,
                                                            int n_vertices,
                                                            int dim,
                                                            double density);

}  // namespace dposet
