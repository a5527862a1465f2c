#include "dposet/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dposet {

std::vector<std::string> validate_filter(const LefschetzComplex& complex,
                                         const Filter& filter) {
  std::vector<std::string> out;
  if (filter.size() != complex.size()) {
    out.push_back("filter has " + std::to_string(filter.size()) +
                  " values for " + std::to_string(complex.size()) + " cells");
    return out;
  }
  for (int i = 0; i < complex.size(); ++i)
    if (!std::isfinite(filter.value(i)))
      out.push_back("cell " + complex.display_name(i) +
                    " has a non-finite value");

  std::vector<int> by_value(complex.size());
  for (int i = 0; i < complex.size(); ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(), [&](int a, int b) {
    return filter.value(a) < filter.value(b);
  });
  for (int k = 0; k + 1 < complex.size(); ++k) {
    int a = by_value[k], b = by_value[k + 1];
    if (filter.value(a) == filter.value(b))
      out.push_back("cells " + complex.display_name(a) + " and " +
                    complex.display_name(b) + " share value " +
                    std::to_string(filter.value(a)));
  }

  for (int y = 0; y < complex.size(); ++y)
    for (int x : complex.facets(y))
      if (!(filter.value(x) < filter.value(y)))
        out.push_back("facet " + complex.display_name(x) + " (value " +
                      std::to_string(filter.value(x)) +
                      ") does not precede cofacet " + complex.display_name(y) +
                      " (value " + std::to_string(filter.value(y)) + ")");
  return out;
}

void require_valid(const LefschetzComplex& complex, const Filter& filter) {
  auto issues = validate_filter(complex, filter);
  if (!issues.empty()) throw std::invalid_argument(issues.front());
}

Filter break_ties(const LefschetzComplex& complex, const Filter& filter) {
  if (filter.size() != complex.size())
    throw std::invalid_argument("filter size mismatch");
  const int n = complex.size();
  std::vector<int> by_value(n);
  for (int i = 0; i < n; ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(), [&](int a, int b) {
    return filter.value(a) < filter.value(b);
  });

  double min_gap = std::numeric_limits<double>::infinity();
  bool has_tie = false;
  for (int k = 0; k + 1 < n; ++k) {
    double gap = filter.value(by_value[k + 1]) - filter.value(by_value[k]);
    if (gap == 0.0)
      has_tie = true;
    else
      min_gap = std::min(min_gap, gap);
  }
  if (!has_tie) return filter;
  if (!std::isfinite(min_gap)) min_gap = 1.0;  // all values identical
  const double eps = std::ldexp(min_gap, -30);

  std::vector<double> values = filter.values();
  int k = 0;
  while (k < n) {
    int end = k + 1;
    while (end < n && filter.value(by_value[end]) == filter.value(by_value[k]))
      ++end;
    if (end - k > 1) {
      // Perturb tied cells in (dim, id) order so any incident tied pair ends
      // with the facet below the cofacet.
      std::vector<int> group(by_value.begin() + k, by_value.begin() + end);
      std::sort(group.begin(), group.end(), [&](int a, int b) {
        if (complex.cell(a).dim != complex.cell(b).dim)
          return complex.cell(a).dim < complex.cell(b).dim;
        return a < b;
      });
      for (std::size_t j = 0; j < group.size(); ++j)
        values[group[j]] += double(j) * eps;
    }
    k = end;
  }
  return Filter(std::move(values));
}

LefschetzComplex sublevel(const LefschetzComplex& complex, const Filter& filter,
                          double bound) {
  std::vector<int> new_id(complex.size(), -1);
  std::vector<Cell> cells;
  for (const Cell& c : complex.cells()) {
    if (filter.value(c.id) <= bound) {
      new_id[c.id] = int(cells.size());
      cells.push_back({int(cells.size()), c.dim, c.label});
    }
  }
  std::vector<std::pair<int, int>> incidences;
  for (int y = 0; y < complex.size(); ++y) {
    if (new_id[y] < 0) continue;
    for (int x : complex.facets(y))
      if (new_id[x] >= 0) incidences.emplace_back(new_id[x], new_id[y]);
  }
  return LefschetzComplex(std::move(cells), incidences);
}

}  // namespace dposet
