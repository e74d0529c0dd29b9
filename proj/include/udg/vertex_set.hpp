#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace udg {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Raw word-span helpers shared by the solvers' hot loops.
namespace bits {

inline bool test(std::span<const Word> w, int i) { return (w[i >> 6] >> (i & 63)) & 1U; }
inline void set(std::span<Word> w, int i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> w, int i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

inline int count(std::span<const Word> w) {
  int c = 0;
  for (Word x : w) c += std::popcount(x);
  return c;
}

inline bool none(std::span<const Word> w) {
  return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

inline int count_and(std::span<const Word> a, std::span<const Word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// Index of the lowest set bit at or after `from`, or -1.
inline int next(std::span<const Word> w, int from) {
  if (from < 0) from = 0;
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  if (wi >= w.size()) return -1;
  Word cur = w[wi] & (~Word{0} << (from & 63));
  while (true) {
    if (cur) return static_cast<int>(wi * kWordBits) + std::countr_zero(cur);
    if (++wi == w.size()) return -1;
    cur = w[wi];
  }
}

}  // namespace bits

/// Fixed-width set of vertex indices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int width) : width_(width), words_(words_for(check_width(width)), 0) {}
  VertexSet(int width, std::initializer_list<int> members) : VertexSet(width) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int width) {
    VertexSet s(width);
    for (int i = 0; i < width; ++i) s.insert(i);
    return s;
  }

  template <typename Range>
  static VertexSet from_range(int width, const Range& members) {
    VertexSet s(width);
    for (int v : members) s.insert(v);
    return s;
  }

  int width() const { return width_; }
  int size() const { return bits::count(words_); }
  bool empty() const { return bits::none(words_); }

  bool contains(int v) const { return v >= 0 && v < width_ && bits::test(words_, v); }
  void insert(int v) {
    check_index(v);
    bits::set(words_, v);
  }
  void erase(int v) {
    check_index(v);
    bits::reset(words_, v);
  }

  /// Members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = bits::next(words_, 0); v >= 0; v = bits::next(words_, v + 1)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int v = bits::next(words_, 0); v >= 0; v = bits::next(words_, v + 1)) f(v);
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within [0, width).
  VertexSet complement() const {
    VertexSet c(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static int check_width(int width) {
    if (width < 0) throw std::invalid_argument("VertexSet width must be nonnegative");
    return width;
  }
  void check_index(int v) const {
    if (v < 0 || v >= width_) throw std::out_of_range("vertex index out of range");
  }
  void check_same(const VertexSet& o) const {
    if (o.width_ != width_) throw std::invalid_argument("VertexSet width mismatch");
  }
  void trim() {
    if (width_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (width_ % kWordBits)) - 1;
  }

  int width_ = 0;
  std::vector<Word> words_;
};

}  // namespace udg
