#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udg/vertex_set.hpp"

namespace udg {

using Point = std::vector<int>;

/// Integer points with a single squared adjacency distance.
struct PointCloud {
  int dim = 0;
  std::vector<Point> points;
  std::int64_t adjacency_sq_dist = 1;
};

inline std::int64_t squared_distance(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = std::int64_t{a[i]} - b[i];
    s += d * d;
  }
  return s;
}

inline std::int64_t dot(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

inline std::int64_t squared_norm(const Point& a) { return dot(a, a); }

class DuplicatePointError : public std::invalid_argument {
 public:
  DuplicatePointError(int first, int second)
      : std::invalid_argument("duplicate point at indices " + std::to_string(first) + " and " +
                              std::to_string(second)),
        first_(first),
        second_(second) {}
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  int first_;
  int second_;
};

class Graph;

/// Mutable edge accumulator; `build()` freezes it into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n, std::string name = {})
      : n_(n), stride_(words_for(static_cast<std::size_t>(n))), rows_(stride_ * n, 0), name_(std::move(name)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  void add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    bits::set(row(i), j);
    bits::set(row(j), i);
  }

  bool has_edge(int i, int j) const {
    return bits::test(std::span<const Word>(rows_.data() + stride_ * i, stride_), j);
  }

  int vertex_count() const { return n_; }
  void set_vertex_transitive(bool v) { transitive_ = v; }

  Graph build() &&;

 private:
  std::span<Word> row(int i) { return {rows_.data() + stride_ * i, stride_}; }

  int n_;
  std::size_t stride_;
  std::vector<Word> rows_;
  std::string name_;
  bool transitive_ = false;
};

/// Immutable undirected loop-free graph with dense bit-row adjacency.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  const std::string& name() const { return name_; }
  std::size_t stride() const { return stride_; }

  /// Set by constructors whose output is known to be vertex-transitive.
  bool known_vertex_transitive() const { return transitive_; }

  bool adjacent(int i, int j) const { return bits::test(row(i), j); }
  std::span<const Word> row(int i) const { return {rows_.data() + stride_ * i, stride_}; }
  VertexSet neighbors(int i) const {
    VertexSet s(n_);
    std::copy(row(i).begin(), row(i).end(), s.words().begin());
    return s;
  }
  int degree(int i) const { return bits::count(row(i)); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
  }

  /// Edges (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = bits::next(row(i), i + 1); j >= 0; j = bits::next(row(i), j + 1)) out.emplace_back(i, j);
    return out;
  }

  Graph renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
  std::string name_;
  bool transitive_ = false;
};

inline Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.stride_ = stride_;
  g.rows_ = std::move(rows_);
  g.name_ = std::move(name_);
  g.transitive_ = transitive_;
  for (int i = 0; i < g.n_; ++i) {
    if (g.adjacent(i, i)) throw std::logic_error("graph has a self-loop");
    for (int j = bits::next(g.row(i), 0); j >= 0; j = bits::next(g.row(i), j + 1))
      if (!g.adjacent(j, i)) throw std::logic_error("graph adjacency is not symmetric");
  }
  return g;
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n, "K" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  b.set_vertex_transitive(true);
  return std::move(b).build();
}

inline Graph edgeless_graph(int n) {
  GraphBuilder b(n, "empty" + std::to_string(n));
  b.set_vertex_transitive(true);
  return std::move(b).build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.vertex_count(), "complement(" + g.name() + ")");
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (!g.adjacent(i, j)) b.add_edge(i, j);
  b.set_vertex_transitive(g.known_vertex_transitive());
  return std::move(b).build();
}

/// i ~ j iff the squared distance between points i and j equals the cloud's adjacency distance.
inline Graph graph_from_points(const PointCloud& cloud, std::string name = "points") {
  const int n = static_cast<int>(cloud.points.size());
  std::map<Point, int> seen;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cloud.points[i].size()) != cloud.dim)
      throw std::invalid_argument("point " + std::to_string(i) + " has wrong dimension");
    auto [it, inserted] = seen.emplace(cloud.points[i], i);
    if (!inserted) throw DuplicatePointError(it->second, i);
  }
  GraphBuilder b(n, std::move(name));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (squared_distance(cloud.points[i], cloud.points[j]) == cloud.adjacency_sq_dist) b.add_edge(i, j);
  return std::move(b).build();
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_of_new;  // new index -> original index
  std::vector<int> new_of_old;  // original index -> new index, -1 when dropped
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep, std::string name = {}) {
  if (keep.width() != g.vertex_count()) throw std::invalid_argument("vertex set is not tied to this graph");
  InducedSubgraph out;
  out.old_of_new = keep.members();
  out.new_of_old.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t k = 0; k < out.old_of_new.size(); ++k) out.new_of_old[out.old_of_new[k]] = static_cast<int>(k);
  const int m = static_cast<int>(out.old_of_new.size());
  GraphBuilder b(m, name.empty() ? g.name() + "[induced]" : std::move(name));
  for (int a = 0; a < m; ++a) {
    const auto row = g.row(out.old_of_new[a]);
    for (int j = bits::next(row, out.old_of_new[a] + 1); j >= 0; j = bits::next(row, j + 1))
      if (out.new_of_old[j] >= 0) b.add_edge(a, out.new_of_old[j]);
  }
  out.graph = std::move(b).build();
  return out;
}

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = true;
};

inline DegreeProfile degree_profile(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  DegreeProfile p{g.degree(0), g.degree(0), true};
  for (int i = 1; i < g.vertex_count(); ++i) {
    const int d = g.degree(i);
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
  }
  p.regular = p.min_degree == p.max_degree;
  return p;
}

/// Components ordered by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet unseen = VertexSet::full(n);
  for (int root = 0; root < n; ++root) {
    if (!unseen.contains(root)) continue;
    VertexSet comp(n);
    VertexSet frontier(n, {root});
    unseen.erase(root);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next &= unseen;
      unseen -= next;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Proper 2-coloring (colors 0/1) when one exists.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      const auto row = g.row(v);
      for (int w = bits::next(row, 0); w >= 0; w = bits::next(row, w + 1)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// ceil(n_vertices / alpha): the smallest k with n_vertices <= k * alpha.
inline std::int64_t ratio_lower_bound(std::int64_t n_vertices, std::int64_t alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (n_vertices <= 0) throw std::invalid_argument("vertex count must be positive");
  return (n_vertices + alpha - 1) / alpha;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.width() != g.vertex_count()) return false;
  const auto members = s.members();
  for (int v : members)
    if (bits::intersects(g.row(v), s.words())) return false;
  return true;
}

/// Colors are 1-based; every vertex must be colored.
inline bool is_proper_coloring(const Graph& g, std::span<const int> color) {
  if (static_cast<int>(color.size()) != g.vertex_count()) return false;
  for (int c : color)
    if (c < 1) return false;
  for (auto [i, j] : g.edges())
    if (color[i] == color[j]) return false;
  return true;
}

struct BoundReport {
  std::string graph_name;
  std::int64_t n_vertices = 0;
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> chi_lower;
  std::optional<std::int64_t> chi_exact;
  std::optional<std::string> witness_path;
};

inline BoundReport make_bound_report(std::string name, std::int64_t n, std::optional<std::int64_t> alpha) {
  BoundReport r;
  r.graph_name = std::move(name);
  r.n_vertices = n;
  r.alpha = alpha;
  if (alpha && *alpha > 0 && n > 0) r.chi_lower = ratio_lower_bound(n, *alpha);
  return r;
}

}  // namespace udg
