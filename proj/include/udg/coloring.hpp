#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "udg/graph.hpp"
#include "udg/mis.hpp"
#include "udg/search.hpp"

namespace udg {

/// Colours are 1..colors; coloring[v] is the colour of vertex v.
struct Coloring {
  int colors = 0;
  std::vector<int> coloring;
};

enum class GreedyOrder { natural, largest_first, dsatur };

/// Sequential first-fit colouring. Always proper; uses at least chi colours.
inline Coloring greedy_coloring_bound(const Graph& g, GreedyOrder policy = GreedyOrder::dsatur) {
  const int n = g.vertex_count();
  Coloring out;
  out.coloring.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return out;

  auto first_fit = [&](int v) {
    std::vector<char> used(static_cast<std::size_t>(out.colors) + 2, 0);
    const auto row = g.row(v);
    for (int w = bits::next(row, 0); w >= 0; w = bits::next(row, w + 1))
      if (out.coloring[w] > 0) used[out.coloring[w]] = 1;
    int c = 1;
    while (used[c]) ++c;
    out.coloring[v] = c;
    out.colors = std::max(out.colors, c);
  };

  if (policy == GreedyOrder::dsatur) {
    // Saturation = number of distinct colours among coloured neighbours.
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (out.coloring[v]) continue;
        if (pick < 0 || sat[v] > sat[pick] || (sat[v] == sat[pick] && deg[v] > deg[pick])) pick = v;
      }
      first_fit(pick);
      const int c = out.coloring[pick];
      const auto row = g.row(pick);
      for (int w = bits::next(row, 0); w >= 0; w = bits::next(row, w + 1)) {
        if (out.coloring[w]) continue;
        auto& s = seen[w];
        if (static_cast<int>(s.size()) <= c) s.resize(static_cast<std::size_t>(c) + 1, 0);
        if (!s[c]) {
          s[c] = 1;
          ++sat[w];
        }
        --deg[w];
      }
    }
    return out;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (policy == GreedyOrder::largest_first)
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int v : order) first_fit(v);
  return out;
}

/// A clique found within budget: exact maximum when the budget allows, otherwise the best seen.
inline std::vector<int> find_large_clique(const Graph& g, const SearchBudget& budget = {}) {
  MisOptions opt;
  opt.budget = budget;
  auto r = max_independent_set(complement(g), opt);
  return r.witness.members();
}

inline int clique_lower_bound(const Graph& g, const SearchBudget& budget = {}) {
  return static_cast<int>(find_large_clique(g, budget).size());
}

struct KColorResult {
  Decision decision = Decision::unknown;  // found: coloring holds a proper k-colouring
  std::optional<Coloring> coloring;
  SearchStats stats;
};

namespace detail {

/// DSATUR branch and bound for a fixed number of colours. A clique is
/// pre-coloured 1..q, and an uncoloured vertex may open at most one new colour
/// (the next unused index), which removes colour-permutation symmetry.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k, std::span<const int> clique, BudgetGuard& guard)
      : g_(g), n_(g.vertex_count()), k_(k), guard_(guard) {
    color_.assign(static_cast<std::size_t>(n_), 0);
    forbid_.assign(static_cast<std::size_t>(n_) * (k_ + 1), 0);
    sat_.assign(static_cast<std::size_t>(n_), 0);
    udeg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) udeg_[v] = g.degree(v);
    clique_.assign(clique.begin(), clique.end());
  }

  std::optional<bool> solve() {
    if (static_cast<int>(clique_.size()) > k_) return false;
    int used = 0;
    for (int v : clique_) {
      ++used;
      if (!assign(v, used)) return false;
    }
    const bool ok = search(static_cast<int>(clique_.size()), used);
    if (guard_.exhausted()) return std::nullopt;
    return ok;
  }

  Coloring coloring() const {
    Coloring c;
    c.coloring = color_;
    c.colors = color_.empty() ? 0 : *std::max_element(color_.begin(), color_.end());
    return c;
  }

 private:
  int& forbid(int v, int c) { return forbid_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  // Colours v with c; returns false if some uncoloured neighbour is left with no colour.
  bool assign(int v, int c) {
    color_[v] = c;
    bool ok = true;
    const auto row = g_.row(v);
    for (int w = bits::next(row, 0); w >= 0; w = bits::next(row, w + 1)) {
      --udeg_[w];
      if (color_[w]) continue;
      if (forbid(w, c)++ == 0) {
        if (++sat_[w] == k_) ok = false;
      }
    }
    return ok;
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = 0;
    const auto row = g_.row(v);
    for (int w = bits::next(row, 0); w >= 0; w = bits::next(row, w + 1)) {
      ++udeg_[w];
      if (color_[w]) continue;
      if (--forbid(w, c) == 0) --sat_[w];
    }
  }

  bool search(int colored, int used) {
    if (colored == n_) return true;
    if (!guard_.tick()) return false;
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && udeg_[v] > udeg_[pick])) pick = v;
    }
    const int top = std::min(used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      if (forbid(pick, c)) continue;
      const bool ok = assign(pick, c);
      if (ok && search(colored + 1, std::max(used, c))) return true;
      unassign(pick);
      if (guard_.stopped()) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  BudgetGuard& guard_;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> sat_;
  std::vector<int> udeg_;
  std::vector<int> clique_;
};

}  // namespace detail

/// Complete search for a proper colouring with at most k colours.
inline KColorResult k_colorable(const Graph& g, int k, const SearchBudget& budget = {},
                                std::span<const int> precolor_clique = {}) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  detail::BudgetGuard guard(budget);
  KColorResult r;
  std::vector<int> clique(precolor_clique.begin(), precolor_clique.end());
  if (clique.empty() && g.vertex_count() > 0) {
    SearchBudget cb;
    cb.max_nodes = 20000;
    clique = find_large_clique(g, cb);
  }
  detail::KColorSearch s(g, k, clique, guard);
  auto ok = s.solve();
  r.stats = guard.stats();
  if (!ok) {
    r.decision = Decision::unknown;
  } else if (*ok) {
    r.decision = Decision::found;
    r.coloring = s.coloring();
    if (!is_proper_coloring(g, r.coloring->coloring)) throw std::logic_error("k-colouring search produced an improper colouring");
  } else {
    r.decision = Decision::none_exists;
  }
  return r;
}

struct ChromaticOptions {
  SearchBudget budget;
  MisOptions mis;
  /// Use the independence-ratio lower bound (one exact MIS solve).
  bool ratio_bound = true;
};

struct ColoringResult {
  SearchStatus status = SearchStatus::optimal;
  int lower_bound = 0;
  int upper_bound = 0;
  Coloring coloring;  // proper colouring with upper_bound colours
  std::optional<int> alpha;
  std::uint64_t nodes_explored = 0;

  bool complete() const { return status == SearchStatus::optimal; }
  std::optional<int> chi() const {
    if (!complete()) return std::nullopt;
    return upper_bound;
  }
};

/// Exact chromatic number by bracketing: lower bound from the larger of a clique
/// and ceil(n / alpha), upper bound from DSATUR, then k-colouring searches
/// upward from the lower bound until the bracket closes.
inline ColoringResult chromatic_number(const Graph& g, const ChromaticOptions& opt = {}) {
  ColoringResult r;
  const int n = g.vertex_count();
  if (n == 0) return r;

  r.coloring = greedy_coloring_bound(g, GreedyOrder::dsatur);
  r.upper_bound = r.coloring.colors;

  SearchBudget clique_budget;
  clique_budget.max_nodes = 200000;
  const auto clique = find_large_clique(g, clique_budget);
  r.lower_bound = std::max<int>(1, static_cast<int>(clique.size()));

  if (opt.ratio_bound && r.lower_bound < r.upper_bound) {
    MisOptions mo = opt.mis;
    if (!mo.budget.max_nodes) mo.budget.max_nodes = opt.budget.max_nodes;
    if (!mo.budget.max_time) mo.budget.max_time = opt.budget.max_time;
    auto m = g.known_vertex_transitive() ? alpha_vertex_transitive(g, 0, mo) : max_independent_set(g, mo);
    r.nodes_explored += m.stats.nodes;
    if (m.complete()) r.alpha = m.lower_bound;
    // A certified upper bound on alpha still gives a valid ratio bound.
    if (m.upper_bound > 0)
      r.lower_bound = std::max<int>(r.lower_bound, static_cast<int>(ratio_lower_bound(n, m.upper_bound)));
  }

  while (r.lower_bound < r.upper_bound) {
    auto kr = k_colorable(g, r.lower_bound, opt.budget, clique);
    r.nodes_explored += kr.stats.nodes;
    if (kr.decision == Decision::found) {
      r.coloring = *kr.coloring;
      r.upper_bound = r.coloring.colors;
    } else if (kr.decision == Decision::none_exists) {
      ++r.lower_bound;
    } else {
      r.status = SearchStatus::incomplete;
      return r;
    }
  }
  return r;
}

}  // namespace udg
