#include "twocat/cells.hpp"

#include <stdexcept>

namespace twocat {

namespace {

using Relation = std::vector<std::vector<char>>;

void close_transitively(Relation& r) {
  std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
}

std::vector<std::vector<int>> classes(const Relation& r) {
  std::size_t n = r.size();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    owner[i] = static_cast<int>(out.size());
    out.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < n; ++j)
      if (owner[j] < 0 && r[i][j] && r[j][i]) {
        owner[j] = owner[i];
        out.back().push_back(static_cast<int>(j));
      }
  }
  return out;
}

}  // namespace

bool CellStructure::all_singletons() const {
  auto single = [](const std::vector<std::vector<int>>& cs) {
    for (const auto& c : cs)
      if (c.size() != 1) return false;
    return true;
  };
  return single(left_cells) && single(right_cells) && single(two_cells);
}

CellStructure cell_structure(std::vector<std::string> names, const std::vector<std::vector<std::vector<int>>>& summands) {
  std::size_t n = names.size();
  if (summands.size() != n) throw std::invalid_argument("product table has the wrong size");
  CellStructure c;
  c.names = std::move(names);
  c.left_geq.assign(n, std::vector<char>(n, 0));
  c.right_geq = c.left_geq;
  for (std::size_t i = 0; i < n; ++i) c.left_geq[i][i] = c.right_geq[i][i] = 1;
  for (std::size_t h = 0; h < n; ++h) {
    if (summands[h].size() != n) throw std::invalid_argument("product table has the wrong size");
    for (std::size_t f = 0; f < n; ++f) {
      // h o f: its summands are left of f and right of h
      for (int g : summands[h][f]) {
        c.left_geq[g][f] = 1;
        c.right_geq[g][h] = 1;
      }
    }
  }
  close_transitively(c.left_geq);
  close_transitively(c.right_geq);
  c.two_geq = c.left_geq;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.right_geq[i][j]) c.two_geq[i][j] = 1;
  close_transitively(c.two_geq);
  c.left_cells = classes(c.left_geq);
  c.right_cells = classes(c.right_geq);
  c.two_cells = classes(c.two_geq);
  return c;
}

}  // namespace twocat
