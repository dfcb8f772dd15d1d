#include "twocat/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twocat {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, bool tree)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), tree_(tree) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw std::invalid_argument("repeated vertex label");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (!ids.insert(a.id).second) throw std::invalid_argument("repeated arrow id '" + a.id + "'");
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
      throw std::invalid_argument("arrow '" + a.id + "' has an undeclared endpoint");
  }
  if (!tree_) return;
  if (vertices_.empty()) throw std::invalid_argument("tree quiver needs a vertex");
  if (arrow_count() != vertex_count() - 1)
    throw std::invalid_argument("tree quiver needs |arrows| = |vertices| - 1");
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : arrows_) {
    int x = find(a.source), y = find(a.target);
    if (x == y) throw std::invalid_argument("tree quiver contains a cycle");
    parent[x] = y;
  }
}

Quiver Quiver::linear(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) a.push_back({"a" + std::to_string(i), i - 1, i});
  return Quiver(std::move(v), std::move(a), true);
}

Quiver Quiver::loop() { return Quiver({"0"}, {{"x", 0, 0}}, false); }

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == label) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].id == id) return i;
  return -1;
}

bool Quiver::has_directed_cycle() const {
  std::vector<int> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> ready;
  for (int v = 0; v < vertex_count(); ++v)
    if (!indeg[v]) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return removed != vertex_count();
}

bool path_less(const Path& a, const Path& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const Quiver& q, int length_bound) {
  if (length_bound <= 0 && q.has_directed_cycle())
    throw std::invalid_argument("quiver has a directed cycle and no length bound was given");
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      out.push_back(p);
      if (length_bound > 0 && static_cast<int>(p.length()) + 1 >= length_bound) continue;
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != p.target) continue;
        Path w{p.source, q.arrow(a).target, {a}};
        w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

std::vector<int> vertices_along(const Quiver& q, const Path& p) {
  std::vector<int> vs{p.source};
  for (std::size_t i = p.arrows.size(); i-- > 0;) vs.push_back(q.arrow(p.arrows[i]).target);
  return vs;
}

bool subpath_leq(const Quiver& q, const Path& w, const Path& w2) {
  if (w.is_trivial()) {
    auto vs = vertices_along(q, w2);
    return std::find(vs.begin(), vs.end(), w.source) != vs.end();
  }
  if (w.length() > w2.length()) return false;
  return std::search(w2.arrows.begin(), w2.arrows.end(), w.arrows.begin(), w.arrows.end()) !=
         w2.arrows.end();
}

std::optional<Path> compose(const Path& w2, const Path& w) {
  if (w2.source != w.target) return std::nullopt;
  Path p{w.source, w2.target, w2.arrows};
  p.arrows.insert(p.arrows.end(), w.arrows.begin(), w.arrows.end());
  return p;
}

std::string describe(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e:" + q.vertex(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

Path parse_path(const Quiver& q, const std::string& text) {
  if (text.rfind("e:", 0) == 0) {
    int v = q.vertex_index(text.substr(2));
    if (v < 0) throw std::invalid_argument("unknown vertex in path '" + text + "'");
    return Path::trivial(v);
  }
  std::vector<int> arrows;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, '.')) {
    int a = q.arrow_index(id);
    if (a < 0) throw std::invalid_argument("unknown arrow '" + id + "' in path '" + text + "'");
    arrows.push_back(a);
  }
  if (arrows.empty()) throw std::invalid_argument("empty path descriptor");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).source != q.arrow(arrows[i + 1]).target)
      throw std::invalid_argument("arrows do not compose in path '" + text + "'");
  return Path{q.arrow(arrows.back()).source, q.arrow(arrows.front()).target, arrows};
}

PathPoset path_poset(const Quiver& q) {
  PathPoset pp;
  pp.paths = enumerate_paths(q);
  std::size_t n = pp.paths.size();
  pp.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pp.leq[i][j] = subpath_leq(q, pp.paths[i], pp.paths[j]);
  return pp;
}

namespace {

// Pruefer decoding: labelled tree on m vertices.
std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& code, int m) {
  std::vector<int> degree(m, 1);
  for (int x : code) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : code) {
    for (int leaf = 0; leaf < m; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1, w = -1;
  for (int v = 0; v < m; ++v) {
    if (degree[v] == 1) (u < 0 ? u : w) = v;
  }
  edges.push_back({u, w});
  return edges;
}

std::vector<std::pair<int, int>> canonical_edges(const std::vector<std::pair<int, int>>& arcs, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [s, t] : arcs) e.push_back({perm[s], perm[t]});
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = e;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Quiver> tree_quiver_corpus(int max_vertices) {
  std::vector<Quiver> out;
  for (int m = 1; m <= max_vertices; ++m) {
    std::vector<std::vector<std::pair<int, int>>> undirected;
    if (m == 1) {
      undirected.push_back({});
    } else if (m == 2) {
      undirected.push_back({{0, 1}});
    } else {
      std::vector<int> code(m - 2, 0);
      while (true) {
        undirected.push_back(pruefer_tree(code, m));
        int i = 0;
        while (i < m - 2 && ++code[i] == m) code[i++] = 0;
        if (i == m - 2) break;
      }
    }
    // Isomorphism classes of the underlying trees first, then orientations.
    std::set<std::vector<std::pair<int, int>>> shapes;
    for (const auto& edges : undirected) {
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> best;
      do {
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : edges) e.push_back(std::minmax(perm[a], perm[b]));
        std::sort(e.begin(), e.end());
        if (best.empty() || e < best) best = e;
      } while (std::next_permutation(perm.begin(), perm.end()));
      shapes.insert(best);
    }
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto& edges : shapes) {
      int e = static_cast<int>(edges.size());
      for (int mask = 0; mask < (1 << e); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < e; ++i) {
          auto [a, b] = edges[i];
          arcs.push_back((mask >> i) & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
        }
        auto canon = canonical_edges(arcs, m);
        if (!seen.insert(canon).second) continue;
      }
    }
    for (const auto& canon : seen) {
      std::vector<std::string> labels;
      for (int v = 1; v <= m; ++v) labels.push_back(std::to_string(v));
      std::vector<Arrow> arrows;
      int k = 0;
      for (auto [s, t] : canon) arrows.push_back({"a" + std::to_string(++k), s, t});
      out.emplace_back(std::move(labels), std::move(arrows), true);
    }
  }
  return out;
}

}  // namespace twocat
