#include "dposet/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dposet/gf2.hpp"

namespace dposet {

LefschetzComplex::LefschetzComplex(
    std::vector<Cell> cells, const std::vector<std::pair<int, int>>& incidences)
    : cells_(std::move(cells)) {
  const int n = int(cells_.size());
  for (int i = 0; i < n; ++i) {
    if (cells_[i].id != i)
      throw std::invalid_argument("cell ids must be dense and in order: slot " +
                                  std::to_string(i) + " holds id " +
                                  std::to_string(cells_[i].id));
    if (cells_[i].dim < 0)
      throw std::invalid_argument("cell " + display_name(i) +
                                  " has negative dimension");
  }
  facets_.resize(n);
  cofacets_.resize(n);
  for (auto [x, y] : incidences) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("incidence (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") out of range");
    facets_[y].push_back(x);
    cofacets_[x].push_back(y);
  }
  for (auto& v : facets_) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument("duplicate incidence pair");
  }
  for (auto& v : cofacets_) std::sort(v.begin(), v.end());
}

int LefschetzComplex::dim() const {
  int d = -1;
  for (const Cell& c : cells_) d = std::max(d, c.dim);
  return d;
}

bool LefschetzComplex::incident(int facet, int cofacet) const {
  const auto& f = facets_[cofacet];
  return std::binary_search(f.begin(), f.end(), facet);
}

std::vector<std::pair<int, int>> LefschetzComplex::incidence_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < size(); ++y)
    for (int x : facets_[y]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

int LefschetzComplex::incidence_count() const {
  int c = 0;
  for (const auto& v : facets_) c += int(v.size());
  return c;
}

std::string LefschetzComplex::display_name(int id) const {
  const std::string& label = cells_[id].label;
  return label.empty() ? "#" + std::to_string(id) : label;
}

std::vector<Violation> validate_complex(const LefschetzComplex& complex) {
  std::vector<Violation> out;
  for (int y = 0; y < complex.size(); ++y)
    for (int x : complex.facets(y))
      if (complex.cell(y).dim != complex.cell(x).dim + 1)
        out.push_back({x, y,
                       "incidence (" + complex.display_name(x) + "," +
                           complex.display_name(y) + ") spans dims " +
                           std::to_string(complex.cell(x).dim) + " -> " +
                           std::to_string(complex.cell(y).dim)});
  // Composition condition: for each x, z the number of middle cells y with
  // x < y < z must be even.
  for (int z = 0; z < complex.size(); ++z) {
    std::map<int, int> middle_count;
    for (int y : complex.facets(z))
      for (int x : complex.facets(y)) ++middle_count[x];
    for (auto [x, count] : middle_count)
      if (count % 2 != 0)
        out.push_back({x, z,
                       "composition of incidences from " +
                           complex.display_name(x) + " to " +
                           complex.display_name(z) + " is odd (" +
                           std::to_string(count) + " paths)"});
  }
  return out;
}

LefschetzComplex from_simplicial(const std::vector<std::vector<int>>& simplices) {
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<int> s = simplices[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty())
      throw std::invalid_argument("empty simplex at index " + std::to_string(i));
    if (!seen.insert(std::move(s)).second)
      throw std::invalid_argument("duplicate simplex at index " + std::to_string(i));
  }

  // Close under faces.
  std::set<std::vector<int>> closed;
  std::vector<std::vector<int>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    std::vector<int> s = std::move(queue.back());
    queue.pop_back();
    if (!closed.insert(s).second) continue;
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != drop) face.push_back(s[k]);
      queue.push_back(std::move(face));
    }
  }

  std::vector<std::vector<int>> ordered(closed.begin(), closed.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::map<std::vector<int>, int> id_of;
  std::vector<Cell> cells;
  for (const auto& s : ordered) {
    std::string label;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) label += '-';
      label += std::to_string(s[k]);
    }
    id_of[s] = int(cells.size());
    cells.push_back({int(cells.size()), int(s.size()) - 1, label});
  }

  std::vector<std::pair<int, int>> incidences;
  for (const auto& s : ordered) {
    if (s.size() < 2) continue;
    int y = id_of[s];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != drop) face.push_back(s[k]);
      incidences.emplace_back(id_of[face], y);
    }
  }
  return LefschetzComplex(std::move(cells), incidences);
}

BettiVector betti(const LefschetzComplex& complex) {
  const int d = complex.dim();
  BettiVector out;
  if (d < 0) return out;

  // Dense per-dimension indexing of cells.
  std::vector<int> count(d + 1, 0);
  std::vector<int> index_within_dim(complex.size(), 0);
  for (const Cell& c : complex.cells()) index_within_dim[c.id] = count[c.dim]++;

  // rank_boundary[p] = rank of the map from p-chains to (p-1)-chains.
  std::vector<int> rank_boundary(d + 2, 0);
  for (int p = 1; p <= d; ++p) {
    std::vector<Gf2Vector> columns;
    for (const Cell& c : complex.cells()) {
      if (c.dim != p) continue;
      Gf2Vector col(count[p - 1]);
      for (int x : complex.facets(c.id))
        if (complex.cell(x).dim == p - 1) col.set(index_within_dim[x]);
      columns.push_back(std::move(col));
    }
    rank_boundary[p] = gf2_rank(std::move(columns));
  }

  out.ranks.resize(d + 1);
  for (int p = 0; p <= d; ++p)
    out.ranks[p] = count[p] - rank_boundary[p] - rank_boundary[p + 1];
  return out;
}

}  // namespace dposet
