#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twocat {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws std::invalid_argument when an endpoint is undeclared, labels repeat,
  // or tree is requested for a graph that is not a connected acyclic one.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, bool tree);

  // Uniformly oriented A_n with vertices "1".."n" and arrows a_i : i -> i+1.
  static Quiver linear(int n);
  // One vertex "0" carrying a single loop "x".
  static Quiver loop();

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_tree() const { return tree_; }
  int vertex_index(const std::string& label) const;  // -1 when absent
  int arrow_index(const std::string& id) const;      // -1 when absent
  bool has_directed_cycle() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  bool tree_ = false;
};

// A directed path. Arrows are kept in written order a_m ... a_1, so a_1 is
// traversed first and composition w' o w is concatenation.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  bool operator==(const Path& o) const {
    return source == o.source && target == o.target && arrows == o.arrows;
  }
  bool operator!=(const Path& o) const { return !(*this == o); }
};

// Canonical order: source, target, length, arrow indices.
bool path_less(const Path& a, const Path& b);

// All paths, trivial ones included, in canonical order. Without a bound a
// directed cycle is rejected; with a bound only paths shorter than it are kept.
std::vector<Path> enumerate_paths(const Quiver& q, int length_bound = 0);

// Vertices met by the path, in traversal order.
std::vector<int> vertices_along(const Quiver& q, const Path& p);

// w <= w' iff w' = a w b for some paths a, b.
bool subpath_leq(const Quiver& q, const Path& w, const Path& w2);

// w' o w, defined when source(w') = target(w).
std::optional<Path> compose(const Path& w2, const Path& w);

// "e:<vertex>" for trivial paths, otherwise arrow ids joined by '.' in written order.
std::string describe(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, const std::string& text);

struct PathPoset {
  std::vector<Path> paths;
  std::vector<std::vector<char>> leq;  // leq[i][j] iff paths[i] <= paths[j]
};
PathPoset path_poset(const Quiver& q);

// Every tree quiver with 1..max_vertices vertices, one per isomorphism class
// of oriented trees, in a fixed order.
std::vector<Quiver> tree_quiver_corpus(int max_vertices);

}  // namespace twocat
