#pragma once

#include <string>
#include <vector>

namespace twocat {

// Left, right and two-sided preorders on indecomposable 1-morphisms and
// their equivalence classes. geq[g][f] means g >= f.
struct CellStructure {
  std::vector<std::string> names;
  std::vector<std::vector<char>> left_geq, right_geq, two_geq;
  std::vector<std::vector<int>> left_cells, right_cells, two_cells;

  bool all_singletons() const;
};

// summands[h][f] lists the indecomposables occurring in h o f.
CellStructure cell_structure(std::vector<std::string> names, const std::vector<std::vector<std::vector<int>>>& summands);

}  // namespace twocat
