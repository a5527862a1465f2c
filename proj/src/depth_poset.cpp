#include "dposet/depth_poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dposet {

std::vector<BirthDeathPair> pairing_to_pairs(const Pairing& pairing,
                                             const LefschetzComplex& complex,
                                             const Filter& filter) {
  std::vector<BirthDeathPair> out;
  out.reserve(pairing.pairs.size());
  for (auto [b, d] : pairing.pairs)
    out.push_back({b, d, complex.cell(b).dim, filter.value(b), filter.value(d)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.birth_value < b.birth_value;
  });
  return out;
}

bool DepthPoset::related(int i, int j) const {
  return std::binary_search(closure.begin(), closure.end(), std::pair{i, j});
}

DepthPoset make_poset(std::vector<BirthDeathPair> elements,
                      std::vector<std::pair<int, int>> relations) {
  const int n = int(elements.size());
  for (auto [i, j] : relations)
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      throw std::logic_error("malformed poset relation");

  // Reachability closure over successor bit rows.
  std::vector<Gf2Vector> succ(n, Gf2Vector(n));
  for (auto [i, j] : relations) succ[i].set(j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j : succ[i].set_bits())
        if (j != i) {
          Gf2Vector merged = succ[i];
          for (int k : succ[j].set_bits()) merged.set(k);
          if (!(merged == succ[i])) {
            succ[i] = std::move(merged);
            changed = true;
          }
        }
  }

  DepthPoset poset;
  poset.elements = std::move(elements);
  for (int i = 0; i < n; ++i) {
    if (succ[i].test(i)) throw std::logic_error("cyclic depth relation");
    for (int j : succ[i].set_bits()) {
      if (succ[j].test(i)) throw std::logic_error("cyclic depth relation");
      const BirthDeathPair& a = poset.elements[i];
      const BirthDeathPair& b = poset.elements[j];
      if (a.dim != b.dim)
        throw std::logic_error("depth relation crosses dimensions");
      if (!(b.birth_value < a.birth_value && a.birth_value < a.death_value &&
            a.death_value < b.death_value))
        throw std::logic_error("depth relation violates interval nesting");
      poset.closure.emplace_back(i, j);
    }
  }
  std::sort(poset.closure.begin(), poset.closure.end());

  for (auto [i, j] : poset.closure) {
    bool direct = true;
    for (int k : succ[i].set_bits())
      if (k != j && succ[k].test(j)) {
        direct = false;
        break;
      }
    if (direct) poset.hasse.emplace_back(i, j);
  }
  return poset;
}

namespace {

BirthDeathPair pivot_pair(const OrderedBoundaryMatrix& m, int s, int t) {
  return {m.cell_at(s), m.cell_at(t), m.dim_at(s), m.value_at(s), m.value_at(t)};
}

void dedupe(std::vector<std::pair<int, int>>& book) {
  std::sort(book.begin(), book.end());
  book.erase(std::unique(book.begin(), book.end()), book.end());
}

}  // namespace

ReductionResult reduce_alpha(OrderedBoundaryMatrix matrix,
                             const ReductionObserver& observer) {
  ReductionResult result;
  int s = matrix.last_nonzero_row();
  while (s >= 0) {
    const int t = matrix.row(s).lowest_set();
    result.order.push_back(pivot_pair(matrix, s, t));
    for (int y : matrix.row(s).set_bits()) {
      if (y <= t) continue;
      matrix.add_column(t, y);
      result.book.emplace_back(matrix.cell_at(t), matrix.cell_at(y));
    }
    matrix.erase_cell(s);
    matrix.erase_cell(t);
    if (observer) observer(matrix);
    const int next = matrix.last_nonzero_row();
    if (next >= s) throw std::logic_error("pivot rows must move strictly up");
    s = next;
  }
  dedupe(result.book);
  return result;
}

ReductionResult reduce_omega(OrderedBoundaryMatrix matrix,
                             const ReductionObserver& observer) {
  ReductionResult result;
  int t = matrix.first_nonzero_column();
  while (t >= 0) {
    const int s = matrix.column(t).highest_set();
    result.order.push_back(pivot_pair(matrix, s, t));
    for (int x : matrix.column(t).set_bits()) {
      if (x >= s) continue;
      matrix.add_row(s, x);
      result.book.emplace_back(matrix.cell_at(s), matrix.cell_at(x));
    }
    matrix.erase_cell(s);
    matrix.erase_cell(t);
    if (observer) observer(matrix);
    const int next = matrix.first_nonzero_column();
    if (next >= 0 && next <= t)
      throw std::logic_error("pivot columns must move strictly right");
    t = next;
  }
  dedupe(result.book);
  return result;
}

namespace {

// Translates book records into element-index relations. `index_of` maps the
// relevant role's cell id to its pair index; `wrong_role` flags cells that
// are paired but play the other role, which a correct reduction never emits.
std::vector<std::pair<int, int>> translate_book(
    const std::vector<std::pair<int, int>>& book,
    const std::map<int, int>& index_of, const std::vector<bool>& wrong_role) {
  std::vector<std::pair<int, int>> out;
  for (auto [pivot_cell, target_cell] : book) {
    auto from = index_of.find(pivot_cell);
    if (from == index_of.end())
      throw std::logic_error("book pivot does not belong to the pairing");
    auto to = index_of.find(target_cell);
    if (to == index_of.end()) {
      if (wrong_role[target_cell])
        throw std::logic_error("book entry targets a paired cell of the wrong role");
      continue;  // unpaired cell: indexes no pair
    }
    out.emplace_back(from->second, to->second);
  }
  return out;
}

}  // namespace

DepthPoset build_depth_poset(const LefschetzComplex& complex,
                             const Filter& filter) {
  OrderedBoundaryMatrix matrix = build_matrix(complex, filter);
  ReductionResult alpha = reduce_alpha(matrix);
  ReductionResult omega = reduce_omega(matrix);
  if (alpha.order.size() != omega.order.size())
    throw std::logic_error("the two reductions disagree on the pairing size");

  std::vector<BirthDeathPair> elements = alpha.order;
  std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
    return a.birth_value < b.birth_value;
  });

  std::map<int, int> death_index, birth_index;
  std::vector<bool> paired_birth(complex.size(), false);
  std::vector<bool> paired_death(complex.size(), false);
  for (int i = 0; i < int(elements.size()); ++i) {
    birth_index[elements[i].birth] = i;
    death_index[elements[i].death] = i;
    paired_birth[elements[i].birth] = true;
    paired_death[elements[i].death] = true;
  }
  for (const BirthDeathPair& p : omega.order) {
    auto bi = birth_index.find(p.birth);
    auto di = death_index.find(p.death);
    if (bi == birth_index.end() || di == death_index.end() ||
        bi->second != di->second)
      throw std::logic_error("the two reductions disagree on the pairing");
  }

  std::vector<std::pair<int, int>> relations =
      translate_book(alpha.book, death_index, paired_birth);
  auto from_omega = translate_book(omega.book, birth_index, paired_death);
  relations.insert(relations.end(), from_omega.begin(), from_omega.end());
  return make_poset(std::move(elements), std::move(relations));
}

std::vector<BirthDeathPair> order_pi(const Pairing& pairing,
                                     const LefschetzComplex& complex,
                                     const Filter& filter) {
  std::vector<BirthDeathPair> out = pairing_to_pairs(pairing, complex, filter);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.persistence() != b.persistence())
      return a.persistence() < b.persistence();
    if (a.birth_value != b.birth_value) return a.birth_value < b.birth_value;
    return a.birth < b.birth;
  });
  return out;
}

bool is_linear_extension(const DepthPoset& poset,
                         const std::vector<BirthDeathPair>& order) {
  if (order.size() != poset.elements.size())
    throw std::invalid_argument("order is not a permutation of the poset");
  std::map<std::pair<int, int>, int> index_of;
  for (int i = 0; i < int(poset.elements.size()); ++i)
    index_of[{poset.elements[i].birth, poset.elements[i].death}] = i;
  std::vector<int> position(poset.elements.size(), -1);
  for (int k = 0; k < int(order.size()); ++k) {
    auto it = index_of.find({order[k].birth, order[k].death});
    if (it == index_of.end() || position[it->second] >= 0)
      throw std::invalid_argument("order is not a permutation of the poset");
    position[it->second] = k;
  }
  for (auto [i, j] : poset.closure)
    if (position[i] > position[j]) return false;
  return true;
}

std::vector<DepthPoset> split_by_dimension(const DepthPoset& poset) {
  int max_dim = -1;
  for (const BirthDeathPair& p : poset.elements) max_dim = std::max(max_dim, p.dim);
  std::vector<DepthPoset> out(max_dim + 1);
  if (max_dim < 0) return out;

  std::vector<int> local_index(poset.elements.size());
  for (int i = 0; i < int(poset.elements.size()); ++i) {
    const BirthDeathPair& p = poset.elements[i];
    local_index[i] = int(out[p.dim].elements.size());
    out[p.dim].elements.push_back(p);
  }
  for (auto [i, j] : poset.closure) {
    const int d = poset.elements[i].dim;
    if (poset.elements[j].dim != d)
      throw std::logic_error("depth relation crosses dimensions");
    out[d].closure.emplace_back(local_index[i], local_index[j]);
  }
  for (auto [i, j] : poset.hasse)
    out[poset.elements[i].dim].hasse.emplace_back(local_index[i], local_index[j]);
  for (DepthPoset& p : out) {
    std::sort(p.closure.begin(), p.closure.end());
    std::sort(p.hasse.begin(), p.hasse.end());
  }
  return out;
}

}  // namespace dposet
