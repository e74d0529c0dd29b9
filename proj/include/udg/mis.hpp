#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "udg/graph.hpp"
#include "udg/search.hpp"
#include "udg/vertex_set.hpp"

namespace udg {

struct MisOptions {
  SearchBudget budget;
  /// Worker threads for the top-level split. 1 gives bit-reproducible witnesses.
  int threads = 1;
  /// Seed the incumbent with a greedy + local-search independent set.
  bool heuristic_seed = true;
  /// Extra starting incumbent; must be independent in the searched graph.
  std::optional<VertexSet> initial;
};

/// Exact independence number with witness, or a certified bracket when the budget ran out.
struct MisResult {
  SearchStatus status = SearchStatus::optimal;
  int lower_bound = 0;  // == witness.size()
  int upper_bound = 0;
  VertexSet witness;
  SearchStats stats;

  bool complete() const { return status == SearchStatus::optimal; }
  std::optional<int> alpha() const {
    if (!complete()) return std::nullopt;
    return lower_bound;
  }
};

enum class Decision { found, none_exists, unknown };

struct DecisionResult {
  Decision decision = Decision::unknown;
  std::optional<VertexSet> witness;
  SearchStats stats;
};

namespace detail {

/// Maximum clique search over the complement of a graph (so cliques here are
/// independent sets of the input). Bitset candidate sets, greedy colour-class
/// bounds with one-swap recolouring, vertices in smallest-last order.
class CliqueKernel {
 public:
  explicit CliqueKernel(const Graph& g) : n_(g.vertex_count()), stride_(words_for(static_cast<std::size_t>(n_))) {
    order_ = smallest_last_order(g);
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) pos[order_[k]] = k;
    adj_.assign(stride_ * n_, 0);
    for (int a = 0; a < n_; ++a) {
      const auto row = g.row(order_[a]);
      auto dst = mrow(a);
      for (int b = 0; b < n_; ++b)
        if (b != a && !bits::test(row, order_[b])) bits::set(dst, b);
    }
  }

  int size() const { return n_; }
  int original(int k) const { return order_[k]; }

  struct Outcome {
    int best = 0;
    std::vector<int> best_set;  // kernel indices
    int upper = 0;
    bool finished = true;
  };

  /// Search for a clique larger than `floor` (a clique of size `floor` is treated as
  /// known). Stops early once a clique of size >= `target` is found.
  Outcome run(int floor, std::vector<int> incumbent, int target, int threads, BudgetGuard& guard) const {
    Shared shared;
    shared.best.store(floor);
    shared.best_set = std::move(incumbent);
    shared.target = target;

    Outcome out;
    if (n_ == 0) {
      out.best = floor;
      out.upper = floor;
      out.best_set = shared.best_set;
      return out;
    }

    Worker root(*this);
    std::vector<Word> all(stride_, 0);
    for (int v = 0; v < n_; ++v) bits::set(all, v);
    std::vector<int> verts, cols;
    root.color_sort(all, 1, verts, cols);
    const int tasks = static_cast<int>(verts.size());
    std::vector<std::uint8_t> done(static_cast<std::size_t>(tasks), 0);
    std::atomic<int> next_task{tasks - 1};

    auto work = [&](Worker& w) {
      while (true) {
        const int i = next_task.fetch_sub(1);
        if (i < 0 || guard.stopped()) return;
        if (cols[i] <= shared.best.load(std::memory_order_relaxed)) {
          // Colours are nondecreasing along the list, so every remaining task is pruned too.
          std::lock_guard lock(shared.mutex);
          for (int j = 0; j <= i; ++j) done[j] = 1;
          return;
        }
        w.root_task(all, verts, i, shared, guard);
        if (!guard.stopped()) {
          std::lock_guard lock(shared.mutex);
          done[i] = 1;
        }
      }
    };

    if (threads <= 1) {
      work(root);
    } else {
      std::vector<std::thread> pool;
      std::vector<Worker> workers;
      workers.reserve(static_cast<std::size_t>(threads));
      for (int t = 0; t < threads; ++t) workers.emplace_back(*this);
      for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { work(workers[t]); });
      for (auto& th : pool) th.join();
    }

    out.best = shared.best.load();
    out.best_set = shared.best_set;
    out.upper = out.best;
    out.finished = true;
    if (out.best >= target && target > floor) {
      // Early stop on target: the remaining tree was not explored.
      out.finished = false;
      int open = -1;
      for (int j = tasks - 1; j >= 0; --j)
        if (!done[j]) {
          open = j;
          break;
        }
      out.upper = std::max(out.best, open >= 0 ? cols[open] : 0);
      return out;
    }
    if (guard.stopped()) {
      out.finished = false;
      int open = -1;
      for (int j = tasks - 1; j >= 0; --j)
        if (!done[j]) {
          open = j;
          break;
        }
      out.upper = std::max(out.best, open >= 0 ? cols[open] : 0);
    }
    return out;
  }

 private:
  struct Shared {
    std::atomic<int> best{0};
    std::vector<int> best_set;
    int target = 0;
    std::mutex mutex;
  };

  class Worker {
   public:
    explicit Worker(const CliqueKernel& k)
        : k_(k), stride_(k.stride_), classes_(k.stride_ * (static_cast<std::size_t>(k.n_) + 2), 0) {
      frames_.resize(static_cast<std::size_t>(k.n_) + 2);
      for (auto& f : frames_) f.cand.assign(stride_, 0);
      scratch_u_.assign(stride_, 0);
      scratch_q_.assign(stride_, 0);
    }

    void root_task(std::span<const Word> all, const std::vector<int>& verts, int i, Shared& shared, BudgetGuard& guard) {
      auto& f = frames_[1].cand;
      std::copy(all.begin(), all.end(), f.begin());
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < verts.size(); ++j) bits::reset(f, verts[j]);
      const int v = verts[i];
      const auto nv = k_.mrow(v);
      for (std::size_t w = 0; w < stride_; ++w) f[w] &= nv[w];
      current_.assign(1, v);
      if (bits::none(f))
        offer(shared, guard);
      else
        expand(1, shared, guard);
    }

    /// Greedy colouring of `cand` in index order; emits vertices of colour >= kmin
    /// with their colour, nondecreasing.
    void color_sort(std::span<const Word> cand, int kmin, std::vector<int>& verts, std::vector<int>& cols) {
      verts.clear();
      cols.clear();
      std::copy(cand.begin(), cand.end(), scratch_u_.begin());
      std::size_t lo = 0;
      int k = 0;
      while (true) {
        while (lo < stride_ && scratch_u_[lo] == 0) ++lo;
        if (lo == stride_) break;
        ++k;
        std::span<Word> cls = class_bits(k);
        std::fill(cls.begin(), cls.end(), 0);
        std::copy(scratch_u_.begin() + lo, scratch_u_.end(), scratch_q_.begin() + lo);
        for (std::size_t w = lo; w < stride_;) {
          if (scratch_q_[w] == 0) {
            ++w;
            continue;
          }
          const int v = static_cast<int>(w * kWordBits) + std::countr_zero(scratch_q_[w]);
          const Word bit = Word{1} << (v & 63);
          scratch_q_[w] &= ~bit;
          scratch_u_[w] &= ~bit;
          cls[w] |= bit;
          const auto nv = k_.mrow(v);
          for (std::size_t x = w; x < stride_; ++x) scratch_q_[x] &= ~nv[x];
        }
        if (k >= kmin) {
          for (int v = bits::next(cls, 0); v >= 0; v = bits::next(cls, v + 1)) {
            if (k > 1 && recolor(v, k, kmin)) continue;
            verts.push_back(v);
            cols.push_back(k);
          }
        }
      }
    }

   private:
    struct Frame {
      std::vector<Word> cand;
      std::vector<int> verts;
      std::vector<int> cols;
    };

    std::span<Word> class_bits(int k) { return {classes_.data() + stride_ * k, stride_}; }

    // Move v out of class k into a class below kmin, displacing its single
    // conflicting vertex w into a later class (still below kmin) where w fits.
    bool recolor(int v, int k, int kmin) {
      const auto nv = k_.mrow(v);
      const int limit = std::min(kmin, k);
      for (int c1 = 1; c1 < limit - 1; ++c1) {
        auto cls1 = class_bits(c1);
        int w = -1;
        int hits = 0;
        for (std::size_t x = 0; x < stride_ && hits < 2; ++x) {
          const Word m = nv[x] & cls1[x];
          if (m) {
            hits += std::popcount(m);
            w = static_cast<int>(x * kWordBits) + std::countr_zero(m);
          }
        }
        if (hits != 1) continue;
        const auto nw = k_.mrow(w);
        for (int c2 = c1 + 1; c2 < limit; ++c2) {
          auto cls2 = class_bits(c2);
          if (bits::intersects(nw, cls2)) continue;
          bits::reset(class_bits(k), v);
          bits::reset(cls1, w);
          bits::set(cls1, v);
          bits::set(cls2, w);
          return true;
        }
      }
      return false;
    }

    void offer(Shared& shared, BudgetGuard& guard) {
      const int size = static_cast<int>(current_.size());
      if (size <= shared.best.load(std::memory_order_relaxed)) return;
      std::lock_guard lock(shared.mutex);
      if (size > shared.best.load(std::memory_order_relaxed)) {
        shared.best.store(size, std::memory_order_relaxed);
        shared.best_set = current_;
        if (size >= shared.target) guard.halt();
      }
    }

    void expand(int depth, Shared& shared, BudgetGuard& guard) {
      if (!guard.tick()) return;
      Frame& f = frames_[depth];
      const int cur = static_cast<int>(current_.size());
      const int kmin = shared.best.load(std::memory_order_relaxed) - cur + 1;
      color_sort(f.cand, kmin, f.verts, f.cols);
      Frame& child = frames_[depth + 1];
      for (int i = static_cast<int>(f.verts.size()) - 1; i >= 0; --i) {
        if (cur + f.cols[i] <= shared.best.load(std::memory_order_relaxed)) return;
        const int v = f.verts[i];
        const auto nv = k_.mrow(v);
        bool any = false;
        for (std::size_t w = 0; w < stride_; ++w) {
          child.cand[w] = f.cand[w] & nv[w];
          any |= child.cand[w] != 0;
        }
        current_.push_back(v);
        if (!any)
          offer(shared, guard);
        else
          expand(depth + 1, shared, guard);
        current_.pop_back();
        if (guard.stopped()) return;
        bits::reset(f.cand, v);
      }
    }

    const CliqueKernel& k_;
    std::size_t stride_;
    std::vector<Word> classes_;
    std::vector<Frame> frames_;
    std::vector<Word> scratch_u_;
    std::vector<Word> scratch_q_;
    std::vector<int> current_;
  };

  std::span<const Word> mrow(int v) const { return {adj_.data() + stride_ * v, stride_}; }
  std::span<Word> mrow(int v) { return {adj_.data() + stride_ * v, stride_}; }

  // Degeneracy order of the complement: repeatedly remove a minimum-degree vertex
  // (lowest index on ties) and place it at the back.
  static std::vector<int> smallest_last_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = n - 1 - g.degree(v);
    std::vector<std::uint8_t> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int slot = n - 1; slot >= 0; --slot) {
      int pick = -1;
      for (int v = 0; v < n; ++v)
        if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
      gone[pick] = 1;
      order[slot] = pick;
      for (int v = 0; v < n; ++v)
        if (!gone[v] && v != pick && !g.adjacent(v, pick)) --deg[v];
    }
    return order;
  }

  int n_;
  std::size_t stride_;
  std::vector<int> order_;
  std::vector<Word> adj_;
};

}  // namespace detail

/// Greedy independent set: repeatedly take a minimum-degree vertex of what remains.
inline VertexSet greedy_independent_set(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  VertexSet chosen(n);
  while (!alive.empty()) {
    int pick = -1;
    int best_deg = n + 1;
    alive.for_each([&](int v) {
      const int d = bits::count_and(g.row(v), alive.words());
      if (d < best_deg) {
        best_deg = d;
        pick = v;
      }
    });
    chosen.insert(pick);
    alive.erase(pick);
    alive -= g.neighbors(pick);
  }
  return chosen;
}

namespace detail {

inline MisResult solve_mis(const Graph& g, const MisOptions& opt, int floor_size, int target) {
  BudgetGuard guard(opt.budget);
  CliqueKernel kernel(g);
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 0; k < kernel.size(); ++k) pos[kernel.original(k)] = k;

  VertexSet seed(g.vertex_count());
  auto consider = [&](const VertexSet& s) {
    if (s.width() != g.vertex_count() || !is_independent(g, s))
      throw std::invalid_argument("initial incumbent is not an independent set of this graph");
    if (s.size() > seed.size()) seed = s;
  };
  if (opt.initial) consider(*opt.initial);
  if (opt.heuristic_seed && g.vertex_count() > 0) consider(greedy_independent_set(g));

  int floor = floor_size;
  std::vector<int> incumbent;
  if (seed.size() > floor) {
    floor = seed.size();
    seed.for_each([&](int v) { incumbent.push_back(pos[v]); });
  }
  auto out = kernel.run(floor, std::move(incumbent), target, opt.threads, guard);

  MisResult r;
  r.witness = VertexSet(g.vertex_count());
  for (int k : out.best_set) r.witness.insert(kernel.original(k));
  r.lower_bound = r.witness.size();
  r.upper_bound = out.upper;
  r.status = out.finished ? SearchStatus::optimal : SearchStatus::incomplete;
  r.stats = guard.stats();
  return r;
}

}  // namespace detail

/// Exact independence number. Empty graph gives alpha = 0.
inline MisResult max_independent_set(const Graph& g, const MisOptions& opt = {}) {
  auto r = detail::solve_mis(g, opt, 0, g.vertex_count() + 1);
  if (r.complete() && r.upper_bound != r.lower_bound) throw std::logic_error("MIS search closed with a gap");
  return r;
}

/// Independence number of a vertex-transitive graph: some maximum independent set
/// contains `pivot`, so alpha(g) = 1 + alpha(non-neighbours of pivot).
inline MisResult alpha_vertex_transitive(const Graph& g, int pivot, const MisOptions& opt = {}) {
  if (pivot < 0 || pivot >= g.vertex_count()) throw std::out_of_range("pivot out of range");
  VertexSet rest = g.neighbors(pivot).complement();
  rest.erase(pivot);
  auto sub = induced_subgraph(g, rest, g.name() + "[pivot]");
  MisOptions inner = opt;
  if (opt.initial) {
    if (!opt.initial->contains(pivot)) {
      inner.initial.reset();
    } else {
      VertexSet mapped(sub.graph.vertex_count());
      opt.initial->for_each([&](int v) {
        if (sub.new_of_old[v] >= 0) mapped.insert(sub.new_of_old[v]);
      });
      inner.initial = mapped;
    }
  }
  auto r = max_independent_set(sub.graph, inner);
  MisResult out;
  out.status = r.status;
  out.stats = r.stats;
  out.witness = VertexSet(g.vertex_count());
  out.witness.insert(pivot);
  r.witness.for_each([&](int k) { out.witness.insert(sub.old_of_new[k]); });
  out.lower_bound = out.witness.size();
  out.upper_bound = r.upper_bound + 1;
  return out;
}

/// Is there an independent set with at least `size` vertices?
inline DecisionResult find_independent_set(const Graph& g, int size, const MisOptions& opt = {}) {
  DecisionResult d;
  if (size <= 0) {
    d.decision = Decision::found;
    d.witness = VertexSet(g.vertex_count());
    return d;
  }
  auto r = detail::solve_mis(g, opt, size - 1, size);
  d.stats = r.stats;
  if (r.lower_bound >= size) {
    d.decision = Decision::found;
    d.witness = r.witness;
  } else if (r.complete()) {
    d.decision = Decision::none_exists;
  }
  return d;
}

}  // namespace udg
