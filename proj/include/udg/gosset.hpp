#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "udg/graph.hpp"
#include "udg/hypercube.hpp"
#include "udg/mis.hpp"

namespace udg {

inline constexpr int kE8Dim = 8;
inline constexpr std::int64_t kGossetSqNorm = 8;
inline constexpr std::int64_t kGossetSqDist = 16;
inline constexpr std::int64_t kBallSqRadius = 16;
inline const std::string kGossetBaseId = "gosset-240";

/// The 240 minimal vectors of E8 scaled to squared norm 8: first the 112
/// permutations of (+-2,+-2,0^6), then the 128 (+-1)^8 with an even number of
/// minus signs, each block in lexicographic order.
inline std::vector<Point> gosset_roots() {
  std::vector<Point> twos;
  for (int i = 0; i < kE8Dim; ++i)
    for (int j = i + 1; j < kE8Dim; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          Point p(kE8Dim, 0);
          p[i] = si;
          p[j] = sj;
          twos.push_back(p);
        }
  std::vector<Point> ones;
  for (int mask = 0; mask < (1 << kE8Dim); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    Point p(kE8Dim);
    for (int i = 0; i < kE8Dim; ++i) p[i] = (mask >> i) & 1 ? -1 : 1;
    ones.push_back(p);
  }
  std::sort(twos.begin(), twos.end());
  std::sort(ones.begin(), ones.end());
  twos.insert(twos.end(), ones.begin(), ones.end());
  return twos;
}

/// G0: the roots, adjacent at squared distance 16 (equivalently, orthogonal).
inline GeometricGraph build_g0() {
  GeometricGraph out;
  out.cloud.dim = kE8Dim;
  out.cloud.points = gosset_roots();
  out.cloud.adjacency_sq_dist = kGossetSqDist;
  GraphBuilder b(static_cast<int>(out.cloud.points.size()), kGossetBaseId);
  const auto& pts = out.cloud.points;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pts.size()); ++j)
      if (squared_distance(pts[i], pts[j]) == kGossetSqDist) b.add_edge(i, j);
  b.set_vertex_transitive(true);
  out.graph = std::move(b).build();
  return out;
}

/// All integer 8-vectors of squared norm <= sq_radius (origin included), lexicographic.
inline std::vector<Point> enumerate_ball(std::int64_t sq_radius = kBallSqRadius) {
  if (sq_radius < 0) throw std::invalid_argument("squared radius must be nonnegative");
  int bound = 0;
  while (std::int64_t{bound + 1} * (bound + 1) <= sq_radius) ++bound;
  std::vector<Point> out;
  Point p(kE8Dim, -bound);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t used) {
    if (i == kE8Dim) {
      out.push_back(p);
      return;
    }
    for (int c = -bound; c <= bound; ++c) {
      const std::int64_t nu = used + std::int64_t{c} * c;
      if (nu > sq_radius) continue;
      p[i] = c;
      rec(i + 1, nu);
    }
  };
  rec(0, 0);
  return out;
}

enum class PoolOrder { lex, degree, random };

struct CandidatePool {
  std::vector<Point> points;
};

/// The ball minus the cloud's points, in the requested order. `degree` sorts by
/// descending number of neighbours in the cloud (lexicographic on ties); `random`
/// is a seeded shuffle of the lexicographic order.
inline CandidatePool make_pool(const PointCloud& current, PoolOrder order = PoolOrder::lex, std::uint64_t seed = 0,
                               std::int64_t sq_radius = kBallSqRadius) {
  std::set<Point> present(current.points.begin(), current.points.end());
  CandidatePool pool;
  for (auto& p : enumerate_ball(sq_radius))
    if (!present.count(p)) pool.points.push_back(std::move(p));
  if (order == PoolOrder::degree) {
    std::vector<std::pair<int, std::size_t>> keyed;
    keyed.reserve(pool.points.size());
    for (std::size_t i = 0; i < pool.points.size(); ++i) {
      int deg = 0;
      for (const auto& q : current.points)
        if (squared_distance(pool.points[i], q) == current.adjacency_sq_dist) ++deg;
      keyed.emplace_back(-deg, i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Point> sorted;
    sorted.reserve(keyed.size());
    for (auto& [neg, i] : keyed) sorted.push_back(pool.points[i]);
    pool.points = std::move(sorted);
  } else if (order == PoolOrder::random) {
    std::mt19937_64 rng(seed);
    // Fisher-Yates with an explicit draw so the order does not depend on the
    // standard library's shuffle implementation.
    for (std::size_t i = pool.points.size(); i > 1; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::swap(pool.points[i - 1], pool.points[pick(rng)]);
    }
  }
  return pool;
}

struct AugmentationState {
  PointCloud cloud;
  Graph graph;
  int alpha = 0;
  std::vector<Point> added;
  std::int64_t rejected_count = 0;
  /// Independent sets of size `alpha` in `graph`, used to reject candidates cheaply.
  std::vector<std::vector<int>> known_max_sets;
};

inline AugmentationState start_augmentation(const GeometricGraph& base, const MisOptions& opt = {}) {
  AugmentationState st;
  st.cloud = base.cloud;
  st.graph = base.graph;
  auto r = base.graph.known_vertex_transitive() && base.graph.vertex_count() > 0
               ? alpha_vertex_transitive(base.graph, 0, opt)
               : max_independent_set(base.graph, opt);
  if (!r.complete()) throw std::runtime_error("base independence number not resolved within budget");
  st.alpha = r.lower_bound;
  st.known_max_sets.push_back(r.witness.members());
  return st;
}

struct AdditionCheck {
  Decision outcome = Decision::unknown;  // found: alpha grows; none_exists: alpha preserved
  bool preserves = false;
  int new_alpha = 0;
  std::vector<int> neighbors;  // current vertices adjacent to x
};

namespace detail {

inline std::vector<int> neighbors_of_point(const PointCloud& cloud, const Point& x) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cloud.points.size()); ++i)
    if (squared_distance(cloud.points[i], x) == cloud.adjacency_sq_dist) out.push_back(i);
  return out;
}

inline constexpr std::size_t kMaxKnownSets = 64;

}  // namespace detail

/// Decides alpha(G + x) == alpha(G) through alpha(G + x) = max(alpha, 1 + alpha(G - N[x])):
/// alpha grows iff the non-neighbours of x hold an independent set of size alpha.
inline AdditionCheck addition_preserves_alpha(AugmentationState& st, const Point& x, const MisOptions& opt = {}) {
  if (static_cast<int>(x.size()) != st.cloud.dim) throw std::invalid_argument("candidate has wrong dimension");
  if (std::find(st.cloud.points.begin(), st.cloud.points.end(), x) != st.cloud.points.end())
    throw std::invalid_argument("candidate is already a vertex");
  AdditionCheck res;
  res.neighbors = detail::neighbors_of_point(st.cloud, x);
  const int n = st.graph.vertex_count();
  VertexSet nbr = VertexSet::from_range(n, res.neighbors);

  for (const auto& s : st.known_max_sets) {
    const bool disjoint = std::none_of(s.begin(), s.end(), [&](int v) { return nbr.contains(v); });
    if (disjoint) {
      res.outcome = Decision::found;
      res.new_alpha = st.alpha + 1;
      return res;
    }
  }

  auto sub = induced_subgraph(st.graph, nbr.complement(), "nonneighbors");
  auto d = find_independent_set(sub.graph, st.alpha, opt);
  res.outcome = d.decision;
  if (d.decision == Decision::found) {
    res.new_alpha = st.alpha + 1;
    std::vector<int> members;
    d.witness->for_each([&](int k) { members.push_back(sub.old_of_new[k]); });
    members.resize(static_cast<std::size_t>(st.alpha));
    if (st.known_max_sets.size() >= detail::kMaxKnownSets) st.known_max_sets.erase(st.known_max_sets.begin() + 1);
    st.known_max_sets.push_back(std::move(members));
  } else if (d.decision == Decision::none_exists) {
    res.preserves = true;
    res.new_alpha = st.alpha;
  }
  return res;
}

/// Appends x as a new vertex (caller has established that alpha is preserved).
inline void accept_point(AugmentationState& st, const Point& x) {
  st.cloud.points.push_back(x);
  const int n = static_cast<int>(st.cloud.points.size());
  GraphBuilder b(n, st.graph.name());
  for (auto [i, j] : st.graph.edges()) b.add_edge(i, j);
  for (int i : detail::neighbors_of_point(st.cloud, x))
    if (i != n - 1) b.add_edge(i, n - 1);
  st.graph = std::move(b).build();
  st.added.push_back(x);
}

struct AugmentOptions {
  std::optional<std::int64_t> max_candidates;
  std::optional<std::int64_t> max_accepted;
  std::optional<std::chrono::milliseconds> max_time;
  /// Skip candidates with no neighbour in the current graph.
  bool skip_isolated = false;
  /// Recompute alpha from scratch after every acceptance and compare.
  bool verify_full = false;
  MisOptions mis;
};

enum class AugmentStop { pool_exhausted, candidate_budget, accept_budget, time_budget };

struct CandidateEvent {
  std::int64_t index = 0;
  Point point;
  bool accepted = false;
  bool skipped = false;
  int alpha_after = 0;
  int degree = 0;
};

struct AugmentResult {
  AugmentationState state;
  AugmentStop stop = AugmentStop::pool_exhausted;
  std::int64_t tested = 0;
};

inline const char* to_string(AugmentStop s) {
  switch (s) {
    case AugmentStop::pool_exhausted: return "pool_exhausted";
    case AugmentStop::candidate_budget: return "candidate_budget";
    case AugmentStop::accept_budget: return "accept_budget";
    case AugmentStop::time_budget: return "time_budget";
  }
  return "?";
}

/// Greedy augmentation: walk the pool in order, keep every point whose addition
/// leaves the independence number unchanged.
inline AugmentResult augment_greedy(AugmentationState st, const CandidatePool& pool, const AugmentOptions& opt = {},
                                    const std::function<void(const CandidateEvent&)>& log = {}) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  AugmentResult out;
  std::set<Point> present(st.cloud.points.begin(), st.cloud.points.end());
  for (std::size_t i = 0; i < pool.points.size(); ++i) {
    if (opt.max_candidates && out.tested >= *opt.max_candidates) {
      out.stop = AugmentStop::candidate_budget;
      break;
    }
    if (opt.max_accepted && static_cast<std::int64_t>(st.added.size()) >= *opt.max_accepted) {
      out.stop = AugmentStop::accept_budget;
      break;
    }
    MisOptions mis = opt.mis;
    if (opt.max_time) {
      const auto left = *opt.max_time - std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
      if (left.count() <= 0) {
        out.stop = AugmentStop::time_budget;
        break;
      }
      if (!mis.budget.max_time || *mis.budget.max_time > left) mis.budget.max_time = left;
    }
    const Point& x = pool.points[i];
    if (present.count(x)) continue;
    ++out.tested;
    CandidateEvent ev;
    ev.index = static_cast<std::int64_t>(i);
    ev.point = x;
    const auto nbrs = detail::neighbors_of_point(st.cloud, x);
    ev.degree = static_cast<int>(nbrs.size());
    if (opt.skip_isolated && nbrs.empty()) {
      ev.skipped = true;
      ev.alpha_after = st.alpha;
      ++st.rejected_count;
      if (log) log(ev);
      continue;
    }
    auto check = addition_preserves_alpha(st, x, mis);
    if (check.outcome == Decision::unknown) {
      --out.tested;
      out.stop = AugmentStop::time_budget;
      break;
    }
    if (check.preserves) {
      accept_point(st, x);
      present.insert(x);
      if (opt.verify_full) {
        auto full = max_independent_set(st.graph, opt.mis);
        if (full.alpha() != st.alpha) throw std::logic_error("incremental alpha test disagrees with full recomputation");
      }
      ev.accepted = true;
    } else {
      ++st.rejected_count;
    }
    ev.alpha_after = st.alpha;
    if (log) log(ev);
  }
  out.state = std::move(st);
  return out;
}

struct Certificate {
  std::string base = kGossetBaseId;
  std::vector<Point> points;
  std::int64_t claimed_alpha = 0;
  std::int64_t claimed_chi_lower = 0;
};

struct CertificateCheck {
  bool pass = false;
  std::string failure;              // empty on pass
  std::optional<int> point_index;   // offending certificate line, 0-based
  BoundReport report;
};

inline GeometricGraph resolve_base(const std::string& id) {
  if (id == kGossetBaseId) return build_g0();
  throw std::invalid_argument("unknown certificate base: " + id);
}

/// Rebuilds base + points and re-derives every claim. Stops at the first violated condition.
inline CertificateCheck verify_certificate(const Certificate& cert, const MisOptions& opt = {}) {
  CertificateCheck out;
  GeometricGraph base;
  try {
    base = resolve_base(cert.base);
  } catch (const std::invalid_argument& e) {
    out.failure = e.what();
    return out;
  }
  std::map<Point, int> seen;
  for (int i = 0; i < static_cast<int>(base.cloud.points.size()); ++i) seen.emplace(base.cloud.points[i], -1);
  for (int i = 0; i < static_cast<int>(cert.points.size()); ++i) {
    const auto& p = cert.points[i];
    if (static_cast<int>(p.size()) != base.cloud.dim) {
      out.failure = "point has wrong dimension";
      out.point_index = i;
      return out;
    }
    if (squared_norm(p) > kBallSqRadius) {
      out.failure = "point outside the candidate ball";
      out.point_index = i;
      return out;
    }
    auto [it, inserted] = seen.emplace(p, i);
    if (!inserted) {
      out.failure = it->second < 0 ? "duplicate vertex: point is already in the base graph"
                                   : "duplicate vertex: point repeats line " + std::to_string(it->second + 1);
      out.point_index = i;
      return out;
    }
  }
  PointCloud cloud = base.cloud;
  cloud.points.insert(cloud.points.end(), cert.points.begin(), cert.points.end());
  Graph g = graph_from_points(cloud, cert.base + "+" + std::to_string(cert.points.size()));

  // Any maximum independent set of the base is a valid starting incumbent.
  MisOptions inner = opt;
  auto base_mis = alpha_vertex_transitive(base.graph, 0, opt);
  if (base_mis.complete()) {
    VertexSet seed(g.vertex_count());
    base_mis.witness.for_each([&](int v) { seed.insert(v); });
    inner.initial = seed;
  }
  auto r = max_independent_set(g, inner);
  out.report = make_bound_report(g.name(), g.vertex_count(), r.alpha());
  if (!r.complete()) {
    out.failure = "independence number not resolved within budget: bracket [" + std::to_string(r.lower_bound) +
                  ", " + std::to_string(r.upper_bound) + "]";
    return out;
  }
  if (*r.alpha() != cert.claimed_alpha) {
    out.failure = "recomputed alpha " + std::to_string(*r.alpha()) + " differs from claimed alpha " +
                  std::to_string(cert.claimed_alpha);
    return out;
  }
  const auto bound = ratio_lower_bound(g.vertex_count(), *r.alpha());
  if (bound != cert.claimed_chi_lower) {
    out.failure = "recomputed chi lower bound " + std::to_string(bound) + " differs from claimed " +
                  std::to_string(cert.claimed_chi_lower);
    return out;
  }
  out.pass = true;
  return out;
}

/// Dividing every coordinate by sqrt(adjacency_sq_dist) gives rational points at
/// unit adjacency distance exactly when that value is a perfect square.
inline bool rational_rescale_check(const PointCloud& cloud) {
  const std::int64_t v = cloud.adjacency_sq_dist;
  if (v <= 0) return false;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

/// The 49 points of the published augmentation, in printed order.
inline std::vector<Point> published_augmentation_points() {
  return {
      {-2, 0, -2, 0, 0, 2, 0, 2},  {-2, 0, 0, 0, 2, 0, -2, 2},   {-2, 0, 0, 2, 2, 2, 0, 0},
      {-2, 0, 2, 0, 0, 2, 0, 2},   {-2, 0, 2, 2, 0, 0, 0, 2},    {-2, 2, 0, 0, -2, 2, 0, 0},
      {-2, 2, 0, 0, 0, 0, 2, 2},   {-2, 2, 2, 0, 2, 0, 0, 0},    {0, -2, -2, 0, 0, 2, 0, 2},
      {0, -2, -2, 0, 2, 0, 0, 2},  {0, -2, 0, 2, 2, 0, 0, 2},    {0, 0, -2, 0, 2, 0, -2, 2},
      {0, 0, -2, 0, 2, 2, 2, 0},   {0, 0, -2, 2, 2, 0, 2, 0},    {0, 0, -1, 1, -1, 0, 0, 1},
      {0, 0, 0, 2, 0, 2, 2, 2},    {0, 0, 0, 2, 2, 0, -2, 2},    {0, 0, 2, 0, -2, 0, 2, 2},
      {0, 0, 2, 0, 2, -2, -2, 0},  {0, 0, 2, 2, 2, 0, 2, 0},     {0, 2, 0, 0, -2, -2, 0, 2},
      {0, 2, 0, 0, 2, 0, -2, -2},  {0, 2, 0, 2, 0, 2, 0, -2},    {0, 2, 0, 2, 2, 2, 0, 0},
      {1, -1, 1, -1, 1, 1, -1, 3}, {1, 0, 0, 1, 1, 1, 0, 0},     {1, 0, 1, 0, 1, 1, 0, 0},
      {1, 1, 0, 1, 1, 0, 0, 0},    {1, 1, 1, 0, 0, 0, 0, 1},     {1, 1, 1, 1, 0, 0, 0, 0},
      {2, -2, -2, 0, 0, 0, 2, 0},  {2, -2, -2, 0, 0, 2, 0, 0},   {2, -2, 0, -2, 0, 0, 2, 0},
      {2, -2, 0, 0, -2, 0, 0, 2},  {2, -2, 0, 0, 2, 0, -2, 0},   {2, 0, 0, 0, 0, -2, 2, -2},
      {2, 0, 0, 0, 0, 2, 2, -2},   {2, 0, 0, 0, 2, -2, 0, -2},   {2, 0, 0, 0, 2, 2, 0, -2},
      {2, 0, 0, 0, 2, 2, 2, 0},    {2, 0, 0, 2, 0, -2, 2, 0},    {2, 0, 0, 2, 2, 0, 0, -2},
      {2, 0, 0, 2, 2, 0, 0, 2},    {2, 0, 2, -2, -2, 0, 0, 0},   {2, 0, 2, 0, 0, 0, 2, -2},
      {2, 0, 2, 2, 0, 0, 0, 2},    {2, 2, 0, 0, 0, 0, 2, 2},     {3, -1, 1, -1, 1, -1, 1, 1},
      {3, -1, 1, 1, -1, -1, -1, -1},
  };
}

inline Certificate published_certificate() {
  Certificate c;
  c.points = published_augmentation_points();
  c.claimed_alpha = 16;
  c.claimed_chi_lower = 19;
  return c;
}

}  // namespace udg
