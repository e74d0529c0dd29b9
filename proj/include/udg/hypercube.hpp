#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

inline constexpr int kMaxCubeDimension = 16;

struct HypercubeSpec {
  int d = 0;
  int u = 0;
  std::optional<int> s;
};

struct GeometricGraph {
  Graph graph;
  PointCloud cloud;
};

namespace detail {

inline void check_cube_params(int d, int u) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (d > kMaxCubeDimension)
    throw std::invalid_argument("d exceeds the width cap of " + std::to_string(kMaxCubeDimension));
  if (u < 1) throw std::invalid_argument("u must be at least 1");
  if (u > d) throw std::invalid_argument("u exceeds d");
}

// Bit k of the code is coordinate d-1-k, so increasing codes are lexicographic vectors.
inline Point cube_point(int d, std::uint32_t code) {
  Point p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[i] = static_cast<int>((code >> (d - 1 - i)) & 1U);
  return p;
}

template <typename Keep>
GeometricGraph cube_subgraph(int d, int u, Keep&& keep, std::string name, bool transitive) {
  std::vector<std::uint32_t> codes;
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << d); ++c)
    if (keep(c)) codes.push_back(c);
  const int n = static_cast<int>(codes.size());
  GraphBuilder b(n, std::move(name));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::popcount(codes[i] ^ codes[j]) == u) b.add_edge(i, j);
  b.set_vertex_transitive(transitive);
  GeometricGraph out;
  out.graph = std::move(b).build();
  out.cloud.dim = d;
  out.cloud.adjacency_sq_dist = u;
  out.cloud.points.reserve(codes.size());
  for (auto c : codes) out.cloud.points.push_back(cube_point(d, c));
  return out;
}

}  // namespace detail

/// C(d,u): all 0/1 vectors of length d, adjacent at Hamming distance exactly u.
inline GeometricGraph hamming_graph(int d, int u) {
  detail::check_cube_params(d, u);
  return detail::cube_subgraph(
      d, u, [](std::uint32_t) { return true; }, "C(" + std::to_string(d) + "," + std::to_string(u) + ")", true);
}

/// H(d,u): the even-weight part of C(d,u). For even u no edge leaves a parity class,
/// and the two classes are isomorphic, so H carries the same alpha and chi as C.
inline GeometricGraph half_cube(int d, int u) {
  detail::check_cube_params(d, u);
  if (u % 2 != 0) throw std::invalid_argument("half cube requires even u");
  return detail::cube_subgraph(
      d, u, [](std::uint32_t c) { return std::popcount(c) % 2 == 0; },
      "H(" + std::to_string(d) + "," + std::to_string(u) + ")", true);
}

/// C(d,u,s): the weight-s vertices of C(d,u).
inline GeometricGraph slice_graph(int d, int u, int s) {
  detail::check_cube_params(d, u);
  if (s < 0 || s > d) throw std::invalid_argument("slice height s out of range 0..d");
  return detail::cube_subgraph(
      d, u, [s](std::uint32_t c) { return std::popcount(c) == s; },
      "C(" + std::to_string(d) + "," + std::to_string(u) + "," + std::to_string(s) + ")", true);
}

/// Vertex map C(d,u) -> C(d+1,u), v -> v.0 (one zero coordinate appended).
/// Hamming distances are unchanged, so the image is an induced copy.
inline std::vector<int> append_zero_embedding(int d, int u) {
  detail::check_cube_params(d, u);
  detail::check_cube_params(d + 1, u);
  std::vector<int> map(std::size_t{1} << d);
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<int>(v << 1);
  return map;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace udg
