#pragma once

#include <openssl/evp.h>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "udg/coloring.hpp"
#include "udg/gosset.hpp"
#include "udg/graph.hpp"

namespace udg::io {

/// Malformed input. `line` is 1-based; `offset` is the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, std::size_t offset)
      : std::runtime_error("line " + std::to_string(line) + " (byte " + std::to_string(offset) + "): " + what),
        line_(line),
        offset_(offset) {}
  int line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  int line_;
  std::size_t offset_;
};

/// Witness refers to a different graph than the one supplied.
class WitnessMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

namespace detail {

/// Splits text into newline-terminated lines, tracking line numbers and byte
/// offsets, and tokenizes each line on single spaces.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : text_(text) {}

  bool next() {
    if (pos_ >= text_.size()) return false;
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) fail_at(text_.size(), "truncated input: missing final newline");
    line_start_ = pos_;
    line_ = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_no_;
    tokens_.clear();
    token_offsets_.clear();
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && line_[i] == ' ') ++i;
      if (i == line_.size()) break;
      const std::size_t start = i;
      while (i < line_.size() && line_[i] != ' ') ++i;
      tokens_.push_back(line_.substr(start, i - start));
      token_offsets_.push_back(line_start_ + start);
    }
    return true;
  }

  const std::vector<std::string_view>& tokens() const { return tokens_; }
  int line_no() const { return line_no_; }
  std::size_t line_offset() const { return line_start_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_, line_start_); }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& what) const {
    throw ParseError(what, line_no_ + 1, offset);
  }

  void expect_count(std::size_t n, const char* what) const {
    if (tokens_.size() != n) fail(std::string("malformed ") + what + " line");
  }

  template <typename Int>
  Int integer(std::size_t i) const {
    if (i >= tokens_.size()) throw ParseError("missing field", line_no_, line_start_ + line_.size());
    Int v{};
    const auto tok = tokens_[i];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("expected an integer, got '" + std::string(tok) + "'", line_no_, token_offsets_[i]);
    return v;
  }

  void expect_keyword(std::size_t i, std::string_view kw) const {
    if (i >= tokens_.size() || tokens_[i] != kw) fail("expected '" + std::string(kw) + "'");
  }

  std::size_t end_offset() const { return text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::string_view line_;
  int line_no_ = 0;
  std::vector<std::string_view> tokens_;
  std::vector<std::size_t> token_offsets_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph files: "p edge N M" followed by M lines "e I J" (1-based, I < J, sorted).

inline std::string serialize_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [i, j] : edges) {
    out += "e ";
    out += std::to_string(i + 1);
    out += ' ';
    out += std::to_string(j + 1);
    out += '\n';
  }
  return out;
}

inline Graph parse_graph(std::string_view text, std::string name = "graph") {
  detail::LineCursor cur(text);
  std::optional<GraphBuilder> b;
  std::int64_t declared = 0;
  std::int64_t seen = 0;
  while (cur.next()) {
    const auto& t = cur.tokens();
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (b) cur.fail("second problem line");
      cur.expect_count(4, "problem");
      cur.expect_keyword(1, "edge");
      const int n = cur.integer<int>(2);
      declared = cur.integer<std::int64_t>(3);
      if (n < 0 || declared < 0) cur.fail("negative count in problem line");
      b.emplace(n, name);
    } else if (t[0] == "e") {
      if (!b) cur.fail("edge before problem line");
      cur.expect_count(3, "edge");
      const int i = cur.integer<int>(1);
      const int j = cur.integer<int>(2);
      if (i < 1 || j < 1 || i > b->vertex_count() || j > b->vertex_count()) cur.fail("vertex index out of range");
      if (i == j) cur.fail("self-loop");
      if (b->has_edge(i - 1, j - 1)) cur.fail("duplicate edge");
      b->add_edge(i - 1, j - 1);
      ++seen;
    } else {
      cur.fail("unknown line type '" + std::string(t[0]) + "'");
    }
  }
  if (!b) throw ParseError("missing problem line", cur.line_no() + 1, cur.end_offset());
  if (seen != declared)
    throw ParseError("problem line declares " + std::to_string(declared) + " edges but file has " +
                         std::to_string(seen),
                     cur.line_no(), cur.end_offset());
  return std::move(*b).build();
}

inline void write_graph(const std::string& path, const Graph& g) { write_file(path, serialize_graph(g)); }

inline Graph read_graph(const std::string& path, std::string name = {}) {
  if (name.empty()) {
    const auto slash = path.find_last_of('/');
    name = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  return parse_graph(read_file(path), std::move(name));
}

inline std::string graph_hash(const Graph& g) { return sha256_hex(serialize_graph(g)); }

// ---------------------------------------------------------------------------
// Coordinate sidecar:
//   coords DIM SQDIST N
//   graph SHA256
//   v INDEX X1 .. XDIM      (INDEX 1-based, one line per vertex in order)

inline std::string serialize_sidecar(const PointCloud& cloud, const Graph& g) {
  std::string out = "coords " + std::to_string(cloud.dim) + " " + std::to_string(cloud.adjacency_sq_dist) + " " +
                    std::to_string(cloud.points.size()) + "\n";
  out += "graph " + graph_hash(g) + "\n";
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    out += "v " + std::to_string(i + 1);
    for (int x : cloud.points[i]) out += " " + std::to_string(x);
    out += '\n';
  }
  return out;
}

struct Sidecar {
  PointCloud cloud;
  std::string graph_hash;
};

inline Sidecar parse_sidecar(std::string_view text) {
  detail::LineCursor cur(text);
  Sidecar s;
  if (!cur.next()) throw ParseError("empty sidecar", 1, 0);
  cur.expect_count(4, "coords header");
  cur.expect_keyword(0, "coords");
  s.cloud.dim = cur.integer<int>(1);
  s.cloud.adjacency_sq_dist = cur.integer<std::int64_t>(2);
  const auto n = cur.integer<std::int64_t>(3);
  if (s.cloud.dim < 0 || n < 0) cur.fail("negative count in header");
  if (!cur.next()) throw ParseError("truncated sidecar: missing graph line", 2, cur.end_offset());
  cur.expect_count(2, "graph");
  cur.expect_keyword(0, "graph");
  s.graph_hash = std::string(cur.tokens()[1]);
  while (cur.next()) {
    cur.expect_count(static_cast<std::size_t>(s.cloud.dim) + 2, "vertex");
    cur.expect_keyword(0, "v");
    if (cur.integer<std::int64_t>(1) != static_cast<std::int64_t>(s.cloud.points.size()) + 1)
      cur.fail("vertex lines out of order");
    Point p(static_cast<std::size_t>(s.cloud.dim));
    for (int k = 0; k < s.cloud.dim; ++k) p[k] = cur.integer<int>(static_cast<std::size_t>(k) + 2);
    s.cloud.points.push_back(std::move(p));
  }
  if (static_cast<std::int64_t>(s.cloud.points.size()) != n)
    throw ParseError("sidecar declares " + std::to_string(n) + " vertices but lists " +
                         std::to_string(s.cloud.points.size()),
                     cur.line_no(), cur.end_offset());
  return s;
}

/// Rebuilds adjacency from the coordinates and checks it against the graph.
inline bool sidecar_matches(const Sidecar& s, const Graph& g) {
  if (s.graph_hash != graph_hash(g)) return false;
  return graph_from_points(s.cloud) == g;
}

// ---------------------------------------------------------------------------
// Witness files:
//   witness independent_set | coloring
//   graph SHA256
//   size K                  (set size, or number of colours)
//   one line per member "I" (1-based), or per vertex "I C" for colourings

enum class WitnessKind { independent_set, coloring };

struct Witness {
  WitnessKind kind = WitnessKind::independent_set;
  std::string graph_hash;
  int size = 0;
  std::vector<int> members;  // 0-based, independent_set only
  std::vector<int> colors;   // per vertex, 1-based colours, coloring only
};

inline std::string serialize_witness(const Witness& w) {
  std::string out = w.kind == WitnessKind::independent_set ? "witness independent_set\n" : "witness coloring\n";
  out += "graph " + w.graph_hash + "\n";
  out += "size " + std::to_string(w.size) + "\n";
  if (w.kind == WitnessKind::independent_set) {
    for (int v : w.members) out += std::to_string(v + 1) + "\n";
  } else {
    for (std::size_t v = 0; v < w.colors.size(); ++v)
      out += std::to_string(v + 1) + " " + std::to_string(w.colors[v]) + "\n";
  }
  return out;
}

inline Witness independent_set_witness(const Graph& g, const VertexSet& s) {
  Witness w;
  w.kind = WitnessKind::independent_set;
  w.graph_hash = graph_hash(g);
  w.members = s.members();
  w.size = static_cast<int>(w.members.size());
  return w;
}

inline Witness coloring_witness(const Graph& g, const Coloring& c) {
  Witness w;
  w.kind = WitnessKind::coloring;
  w.graph_hash = graph_hash(g);
  w.colors = c.coloring;
  w.size = c.colors;
  return w;
}

inline Witness parse_witness(std::string_view text) {
  detail::LineCursor cur(text);
  Witness w;
  if (!cur.next()) throw ParseError("empty witness", 1, 0);
  cur.expect_count(2, "witness header");
  cur.expect_keyword(0, "witness");
  if (cur.tokens()[1] == "independent_set")
    w.kind = WitnessKind::independent_set;
  else if (cur.tokens()[1] == "coloring")
    w.kind = WitnessKind::coloring;
  else
    cur.fail("unknown witness kind");
  if (!cur.next()) throw ParseError("truncated witness: missing graph line", 2, cur.end_offset());
  cur.expect_count(2, "graph");
  cur.expect_keyword(0, "graph");
  w.graph_hash = std::string(cur.tokens()[1]);
  if (!cur.next()) throw ParseError("truncated witness: missing size line", 3, cur.end_offset());
  cur.expect_count(2, "size");
  cur.expect_keyword(0, "size");
  w.size = cur.integer<int>(1);
  while (cur.next()) {
    if (w.kind == WitnessKind::independent_set) {
      cur.expect_count(1, "member");
      w.members.push_back(cur.integer<int>(0) - 1);
    } else {
      cur.expect_count(2, "colour");
      if (cur.integer<std::int64_t>(0) != static_cast<std::int64_t>(w.colors.size()) + 1)
        cur.fail("colour lines out of order");
      w.colors.push_back(cur.integer<int>(1));
    }
  }
  if (w.kind == WitnessKind::independent_set && static_cast<int>(w.members.size()) != w.size)
    throw ParseError("witness declares size " + std::to_string(w.size) + " but lists " +
                         std::to_string(w.members.size()) + " members",
                     cur.line_no(), cur.end_offset());
  return w;
}

/// Checks the witness against `g` without trusting whoever produced it.
inline void validate_witness(const Witness& w, const Graph& g) {
  if (w.graph_hash != graph_hash(g)) throw WitnessMismatch("witness does not match graph");
  if (w.kind == WitnessKind::independent_set) {
    VertexSet s(g.vertex_count());
    for (int v : w.members) {
      if (v < 0 || v >= g.vertex_count()) throw WitnessMismatch("witness vertex out of range");
      if (s.contains(v)) throw WitnessMismatch("witness repeats a vertex");
      s.insert(v);
    }
    if (!is_independent(g, s)) throw WitnessMismatch("witness set is not independent");
  } else {
    if (!is_proper_coloring(g, w.colors)) throw WitnessMismatch("witness colouring is not proper");
    const int used = w.colors.empty() ? 0 : *std::max_element(w.colors.begin(), w.colors.end());
    if (used != w.size) throw WitnessMismatch("witness colour count differs from declared size");
  }
}

inline void write_witness(const std::string& path, const Witness& w) { write_file(path, serialize_witness(w)); }

inline Witness read_witness(const std::string& path, const Graph& g) {
  auto w = parse_witness(read_file(path));
  validate_witness(w, g);
  return w;
}

// ---------------------------------------------------------------------------
// Certificates:
//   base ID
//   alpha A
//   chi_lower K
//   [stop REASON]           (optional; written by augmentation runs)
//   X1 .. X8                (one point per line)

struct CertificateFile {
  Certificate cert;
  std::optional<std::string> stop;
};

inline std::string serialize_certificate(const Certificate& c, const std::optional<std::string>& stop = {}) {
  std::string out = "base " + c.base + "\n";
  out += "alpha " + std::to_string(c.claimed_alpha) + "\n";
  out += "chi_lower " + std::to_string(c.claimed_chi_lower) + "\n";
  if (stop) out += "stop " + *stop + "\n";
  for (const auto& p : c.points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(p[k]);
    }
    out += '\n';
  }
  return out;
}

inline CertificateFile parse_certificate(std::string_view text) {
  detail::LineCursor cur(text);
  CertificateFile f;
  auto header = [&](const char* key) {
    if (!cur.next()) throw ParseError(std::string("truncated certificate: missing ") + key, cur.line_no() + 1,
                                      cur.end_offset());
    cur.expect_count(2, key);
    cur.expect_keyword(0, key);
  };
  header("base");
  f.cert.base = std::string(cur.tokens()[1]);
  header("alpha");
  f.cert.claimed_alpha = cur.integer<std::int64_t>(1);
  header("chi_lower");
  f.cert.claimed_chi_lower = cur.integer<std::int64_t>(1);
  bool first_point = true;
  while (cur.next()) {
    const auto& t = cur.tokens();
    if (first_point && !t.empty() && t[0] == "stop") {
      cur.expect_count(2, "stop");
      f.stop = std::string(t[1]);
      first_point = false;
      continue;
    }
    first_point = false;
    cur.expect_count(kE8Dim, "point");
    Point p(kE8Dim);
    for (int k = 0; k < kE8Dim; ++k) p[k] = cur.integer<int>(static_cast<std::size_t>(k));
    f.cert.points.push_back(std::move(p));
  }
  return f;
}

inline void write_certificate(const std::string& path, const Certificate& c,
                              const std::optional<std::string>& stop = {}) {
  write_file(path, serialize_certificate(c, stop));
}

inline CertificateFile read_certificate(const std::string& path) { return parse_certificate(read_file(path)); }

/// Point list (8 integers per line), e.g. to drive augmentation from a fixed pool.
inline std::vector<Point> parse_point_list(std::string_view text) {
  detail::LineCursor cur(text);
  std::vector<Point> out;
  while (cur.next()) {
    const auto& t = cur.tokens();
    if (t.empty() || t[0] == "#") continue;
    if (t[0] == "base" || t[0] == "alpha" || t[0] == "chi_lower" || t[0] == "stop") continue;
    cur.expect_count(kE8Dim, "point");
    Point p(kE8Dim);
    for (int k = 0; k < kE8Dim; ++k) p[k] = cur.integer<int>(static_cast<std::size_t>(k));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace udg::io
