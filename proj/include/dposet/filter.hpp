#pragma once

#include <string>
#include <vector>

#include "dposet/complex.hpp"

namespace dposet {

// Real-valued map on cells, indexed by cell id. A filter is usable for the
// ordered-matrix machinery only when it is injective and assigns every facet
// a smaller value than its cofacets; see validate_filter.
class Filter {
 public:
  Filter() = default;
  explicit Filter(std::vector<double> values) : values_(std::move(values)) {}

  int size() const { return int(values_.size()); }
  double value(int id) const { return values_[id]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const Filter&) const = default;

 private:
  std::vector<double> values_;
};

// Human-readable problems: size mismatch, non-finite values, ties, or an
// incidence whose facet value is not below the cofacet value. Empty when
// the filter is valid for the complex.
std::vector<std::string> validate_filter(const LefschetzComplex& complex,
                                         const Filter& filter);

// Throws std::invalid_argument with the first problem, if any.
void require_valid(const LefschetzComplex& complex, const Filter& filter);

// Resolves ties by adding k*eps to the k-th member of each tied group, with
// groups ordered by (dim, id) so facet monotonicity is preserved. eps is
// 2^-30 times the smallest nonzero value gap. No-op when already injective.
Filter break_ties(const LefschetzComplex& complex, const Filter& filter);

// Restriction of the complex to cells with value <= bound. Cell ids are
// re-indexed densely; labels are kept.
LefschetzComplex sublevel(const LefschetzComplex& complex, const Filter& filter,
                          double bound);

}  // namespace dposet
