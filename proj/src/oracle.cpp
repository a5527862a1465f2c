#include "dposet/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dposet {

namespace {

// Value-based signature, stable across the dense re-indexing of quotients.
std::string quotient_signature(const LefschetzComplex& complex,
                               const Filter& filter) {
  std::vector<int> by_value(complex.size());
  for (int i = 0; i < complex.size(); ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(),
            [&](int a, int b) { return filter.value(a) < filter.value(b); });
  std::vector<int> rank(complex.size());
  for (int k = 0; k < complex.size(); ++k) rank[by_value[k]] = k;

  std::ostringstream out;
  out.precision(17);
  for (int c : by_value)
    out << complex.cell(c).dim << ':' << filter.value(c) << ';';
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : complex.incidence_pairs())
    edges.emplace_back(rank[x], rank[y]);
  std::sort(edges.begin(), edges.end());
  for (auto [x, y] : edges) out << x << '<' << y << ';';
  return out.str();
}

struct Enumerator {
  const std::vector<BirthDeathPair>& pairs;
  std::size_t cap;
  bool capped = false;

  struct MemoEntry {
    std::vector<std::vector<int>> suffixes;
    std::string signature;
  };
  std::map<std::uint64_t, MemoEntry> memo;

  int pair_index_for(const Filter& filter, const ShallowPair& p) const {
    const double bv = filter.value(p.birth);
    const double dv = filter.value(p.death);
    for (int i = 0; i < int(pairs.size()); ++i)
      if (pairs[i].birth_value == bv && pairs[i].death_value == dv) return i;
    throw std::logic_error("shallow pair of a quotient is not a pair of the input");
  }

  const std::vector<std::vector<int>>& search(const LefschetzComplex& complex,
                                              const Filter& filter,
                                              std::uint64_t canceled) {
    auto it = memo.find(canceled);
    if (it != memo.end()) {
      // Quotients reached through different schedules of the same pair set
      // must coincide.
      if (it->second.signature != quotient_signature(complex, filter))
        throw std::logic_error("quotient depends on the cancellation schedule");
      return it->second.suffixes;
    }

    std::vector<ShallowPair> frontier = shallow_pairs(complex, filter);
    MemoEntry entry;
    entry.signature = quotient_signature(complex, filter);
    if (frontier.empty()) {
      entry.suffixes.push_back({});
    } else {
      for (const ShallowPair& p : frontier) {
        const int idx = pair_index_for(filter, p);
        Quotient q = cancel(complex, filter, p.birth, p.death);
        const auto& sub = search(q.complex, q.filter, canceled | (1ULL << idx));
        for (const auto& suffix : sub) {
          std::vector<int> order;
          order.reserve(suffix.size() + 1);
          order.push_back(idx);
          order.insert(order.end(), suffix.begin(), suffix.end());
          entry.suffixes.push_back(std::move(order));
          if (entry.suffixes.size() > cap) {
            capped = true;
            entry.suffixes.clear();
            entry.suffixes.push_back({});
            memo[canceled] = std::move(entry);
            return memo[canceled].suffixes;
          }
        }
        if (capped) break;
      }
    }
    auto [pos, inserted] = memo.emplace(canceled, std::move(entry));
    return pos->second.suffixes;
  }
};

}  // namespace

ShallowOrderEnumeration enumerate_shallow_orders(const LefschetzComplex& complex,
                                                 const Filter& filter,
                                                 std::size_t cap) {
  require_valid(complex, filter);
  Pairing pairing = standard_reduction(build_matrix(complex, filter));
  ShallowOrderEnumeration result;
  result.pairs = pairing_to_pairs(pairing, complex, filter);
  if (result.pairs.size() > 63)
    throw std::invalid_argument("enumeration supports at most 63 pairs");

  Enumerator enumerator{result.pairs, cap, false, {}};
  const auto& orders = enumerator.search(complex, filter, 0);
  result.cap_exceeded = enumerator.capped;
  if (!result.cap_exceeded) result.orders = orders;
  return result;
}

DepthPoset brute_depth_poset(const LefschetzComplex& complex,
                             const Filter& filter, std::size_t cap) {
  ShallowOrderEnumeration e = enumerate_shallow_orders(complex, filter, cap);
  if (e.cap_exceeded) throw CapExceeded("shallow-order enumeration exceeded cap");
  const int n = int(e.pairs.size());

  if (e.orders.empty())
    throw std::logic_error("enumeration must yield at least one order");
  std::vector<std::pair<int, int>> relations;
  std::vector<int> position(n);
  std::vector<bool> always_before(std::size_t(n) * n, n > 0);
  for (const auto& order : e.orders) {
    if (int(order.size()) != n)
      throw std::logic_error("enumerated order does not cover the pairing");
    for (int k = 0; k < n; ++k) position[order[k]] = k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (position[i] >= position[j]) always_before[std::size_t(i) * n + j] = false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && always_before[std::size_t(i) * n + j])
        relations.emplace_back(i, j);
  return make_poset(std::move(e.pairs), std::move(relations));
}

namespace {

void extend(const std::vector<std::vector<int>>& succ,
            std::vector<int>& indegree, std::vector<int>& prefix,
            std::vector<bool>& used, std::size_t cap,
            std::vector<std::vector<int>>& out) {
  const int n = int(indegree.size());
  if (int(prefix.size()) == n) {
    if (out.size() >= cap) throw CapExceeded("linear-extension cap exceeded");
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[i] || indegree[i] != 0) continue;
    used[i] = true;
    prefix.push_back(i);
    for (int j : succ[i]) --indegree[j];
    extend(succ, indegree, prefix, used, cap, out);
    for (int j : succ[i]) ++indegree[j];
    prefix.pop_back();
    used[i] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const DepthPoset& poset,
                                                std::size_t cap) {
  const int n = int(poset.elements.size());
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indegree(n, 0);
  for (auto [i, j] : poset.hasse) {
    succ[i].push_back(j);
    ++indegree[j];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> used(n, false);
  extend(succ, indegree, prefix, used, cap, out);
  return out;
}

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
};

void cliques_up_to(const std::vector<std::vector<bool>>& adjacent, int max_size,
                   std::vector<int>& current, int from,
                   std::vector<std::vector<int>>& out) {
  if (int(current.size()) >= 2) out.push_back(current);
  if (int(current.size()) == max_size) return;
  const int n = int(adjacent.size());
  for (int v = from; v < n; ++v) {
    bool ok = true;
    for (int u : current)
      if (!adjacent[u][v]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(v);
    cliques_up_to(adjacent, max_size, current, v + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::pair<LefschetzComplex, Filter> random_filtered_complex(std::uint64_t seed,
                                                            int n_vertices,
                                                            int dim,
                                                            double density) {
  if (n_vertices <= 0) throw std::invalid_argument("n_vertices must be positive");
  if (dim < 0) throw std::invalid_argument("dim must be non-negative");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("density must lie in (0, 1]");

  SplitMix rng{seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL};
  std::vector<std::vector<bool>> adjacent(n_vertices,
                                          std::vector<bool>(n_vertices, false));
  for (int i = 0; i < n_vertices; ++i)
    for (int j = i + 1; j < n_vertices; ++j)
      if (rng.uniform() < density) adjacent[i][j] = adjacent[j][i] = true;

  std::vector<std::vector<int>> simplices;
  for (int v = 0; v < n_vertices; ++v) simplices.push_back({v});
  if (dim >= 1) {
    std::vector<int> current;
    cliques_up_to(adjacent, dim + 1, current, 0, simplices);
  }
  LefschetzComplex complex = from_simplicial(simplices);

  // Random injective values, then repair: swapping the values of a violating
  // facet-cofacet pair moves the larger value to the higher dimension, so the
  // dimension-weighted rank sum strictly grows and the loop terminates.
  const int n = complex.size();
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = rng.uniform();
  std::sort(values.begin(), values.end());
  for (int i = n - 1; i > 0; --i)
    std::swap(values[i], values[std::size_t(rng.next() % std::uint64_t(i + 1))]);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y)
      for (int x : complex.facets(y))
        if (values[x] > values[y]) {
          std::swap(values[x], values[y]);
          changed = true;
        }
  }
  Filter filter{std::move(values)};
  require_valid(complex, filter);
  return {std::move(complex), std::move(filter)};
}

}  // namespace dposet
