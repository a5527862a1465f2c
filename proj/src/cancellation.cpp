#include "dposet/cancellation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dposet/matrix.hpp"
#include "dposet/pairing.hpp"

namespace dposet {

bool is_shallow(const LefschetzComplex& complex, const Filter& filter, int s,
                int t) {
  if (s < 0 || s >= complex.size() || t < 0 || t >= complex.size()) return false;
  if (!complex.incident(s, t)) return false;
  for (int x : complex.facets(t))
    if (filter.value(x) > filter.value(s)) return false;
  for (int y : complex.cofacets(s))
    if (filter.value(y) < filter.value(t)) return false;
  return true;
}

std::vector<ShallowPair> shallow_pairs(const LefschetzComplex& complex,
                                       const Filter& filter) {
  std::vector<ShallowPair> out;
  for (int t = 0; t < complex.size(); ++t) {
    const auto& facets = complex.facets(t);
    if (facets.empty()) continue;
    int s = *std::max_element(facets.begin(), facets.end(), [&](int a, int b) {
      return filter.value(a) < filter.value(b);
    });
    const auto& cofacets = complex.cofacets(s);
    int first = *std::min_element(
        cofacets.begin(), cofacets.end(),
        [&](int a, int b) { return filter.value(a) < filter.value(b); });
    if (first == t) out.push_back({s, t});
  }
  std::sort(out.begin(), out.end(), [&](const ShallowPair& a, const ShallowPair& b) {
    return filter.value(a.birth) < filter.value(b.birth);
  });
  return out;
}

Quotient cancel(const LefschetzComplex& complex, const Filter& filter, int s,
                int t) {
  if (s < 0 || s >= complex.size() || t < 0 || t >= complex.size())
    throw std::invalid_argument("cell id out of range");
  if (!complex.incident(s, t))
    throw std::invalid_argument("cannot cancel (" + complex.display_name(s) +
                                "," + complex.display_name(t) +
                                "): not a facet-cofacet pair");

  // Column route: add the facet list of t into every other cofacet of s.
  std::vector<std::set<int>> facets(complex.size());
  for (int y = 0; y < complex.size(); ++y) {
    const auto& f = complex.facets(y);
    facets[y].insert(f.begin(), f.end());
  }
  const std::set<int>& column_t = facets[t];
  for (int y : complex.cofacets(s)) {
    if (y == t) continue;
    for (int x : column_t) {
      auto [it, inserted] = facets[y].insert(x);
      if (!inserted) facets[y].erase(it);
    }
  }

  std::vector<int> new_id(complex.size(), -1);
  std::vector<Cell> cells;
  std::vector<double> values;
  for (const Cell& c : complex.cells()) {
    if (c.id == s || c.id == t) continue;
    new_id[c.id] = int(cells.size());
    cells.push_back({int(cells.size()), c.dim, c.label});
    values.push_back(filter.value(c.id));
  }
  std::vector<std::pair<int, int>> incidences;
  for (int y = 0; y < complex.size(); ++y) {
    if (new_id[y] < 0) continue;
    for (int x : facets[y])
      if (new_id[x] >= 0) incidences.emplace_back(new_id[x], new_id[y]);
  }
  return {LefschetzComplex(std::move(cells), incidences),
          Filter(std::move(values))};
}

namespace {

// Pair sets compared across quotients by (birth value, death value).
std::set<std::pair<double, double>> pair_values(const LefschetzComplex& complex,
                                                const Filter& filter) {
  std::set<std::pair<double, double>> out;
  Pairing pairing = standard_reduction(build_matrix(complex, filter));
  for (auto [b, d] : pairing.pairs)
    out.insert({filter.value(b), filter.value(d)});
  return out;
}

std::set<std::pair<double, double>> shallow_values(
    const LefschetzComplex& complex, const Filter& filter) {
  std::set<std::pair<double, double>> out;
  for (const ShallowPair& p : shallow_pairs(complex, filter))
    out.insert({filter.value(p.birth), filter.value(p.death)});
  return out;
}

}  // namespace

Quotient cancel_shallow(const LefschetzComplex& complex, const Filter& filter,
                        ShallowPair pair, bool debug_check) {
  if (!is_shallow(complex, filter, pair.birth, pair.death))
    throw std::invalid_argument("pair (" + complex.display_name(pair.birth) +
                                "," + complex.display_name(pair.death) +
                                ") is not shallow");
  Quotient q = cancel(complex, filter, pair.birth, pair.death);
  if (debug_check) {
    auto before_bd = pair_values(complex, filter);
    auto before_sh = shallow_values(complex, filter);
    std::pair<double, double> canceled{filter.value(pair.birth),
                                       filter.value(pair.death)};
    before_bd.erase(canceled);
    before_sh.erase(canceled);
    auto after_bd = pair_values(q.complex, q.filter);
    auto after_sh = shallow_values(q.complex, q.filter);
    if (after_bd != before_bd)
      throw std::logic_error("cancellation changed other birth-death pairs");
    if (!std::includes(after_sh.begin(), after_sh.end(), before_sh.begin(),
                       before_sh.end()))
      throw std::logic_error("cancellation removed another shallow pair");
  }
  return q;
}

CancelSequenceResult cancel_sequence(const LefschetzComplex& complex,
                                     const Filter& filter,
                                     const std::vector<ShallowPair>& pairs) {
  CancelSequenceResult result;
  result.state = {complex, filter};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].birth < 0 || pairs[i].birth >= filter.size() ||
        pairs[i].death < 0 || pairs[i].death >= filter.size())
      throw std::invalid_argument("pair cell id out of range");
    int s = find_cell_by_value(result.state.filter, filter.value(pairs[i].birth));
    int t = find_cell_by_value(result.state.filter, filter.value(pairs[i].death));
    if (s < 0 || t < 0 ||
        !is_shallow(result.state.complex, result.state.filter, s, t)) {
      result.failed_index = int(i);
      return result;
    }
    result.state = cancel(result.state.complex, result.state.filter, s, t);
  }
  result.ok = true;
  return result;
}

int find_cell_by_value(const Filter& filter, double value) {
  for (int i = 0; i < filter.size(); ++i)
    if (filter.value(i) == value) return i;
  return -1;
}

}  // namespace dposet
