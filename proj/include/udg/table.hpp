#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "udg/coloring.hpp"
#include "udg/hypercube.hpp"

namespace udg {

enum class CellStatus { exact, lower_bound };

inline const char* to_string(CellStatus s) { return s == CellStatus::exact ? "exact" : "lower-bound"; }

/// One cell of the chi(C(d,u)) grid. For lower-bound rows `value` is the best
/// lower bound and `upper` the best colouring found, when there is one.
struct TableRow {
  int d = 0;
  int u = 0;
  CellStatus status = CellStatus::exact;
  int value = 0;
  std::optional<int> upper;
  std::optional<std::int64_t> alpha;  // alpha(C(d,u)) when known exactly
  std::int64_t n = 0;                 // |V(C(d,u))| = 2^d
  double runtime_s = 0;
  bool from_monotonicity = false;
};

struct ResultTable {
  std::vector<TableRow> rows;
};

/// chi(C(d,u)) within `budget` per solver stage. For u > d the graph has no
/// edges. For even u the solve runs on the half cube, which has the same chi
/// (the two parity classes are isomorphic and not joined by any edge).
inline TableRow compute_cell(int d, int u, const SearchBudget& budget = {}) {
  const auto start = std::chrono::steady_clock::now();
  TableRow row;
  row.d = d;
  row.u = u;
  row.n = std::int64_t{1} << d;
  Graph g;
  std::int64_t alpha_scale = 1;
  if (u > d) {
    if (d > kMaxCubeDimension) throw std::invalid_argument("d exceeds the width cap");
    g = edgeless_graph(static_cast<int>(row.n));
  } else if (u % 2 == 0) {
    g = half_cube(d, u).graph;
    alpha_scale = 2;
  } else {
    g = hamming_graph(d, u).graph;
  }
  ChromaticOptions opt;
  opt.budget = budget;
  auto r = chromatic_number(g, opt);
  row.status = r.complete() ? CellStatus::exact : CellStatus::lower_bound;
  row.value = r.complete() ? *r.chi() : r.lower_bound;
  if (!r.complete()) row.upper = r.upper_bound;
  if (r.alpha) row.alpha = *r.alpha * alpha_scale;
  if (u > d) row.alpha = row.n;
  row.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

/// C(d,u) embeds as an induced subgraph of C(d+1,u), so chi never decreases
/// along a row. Raises lower-bound cells to the value of the cell to their left.
inline void apply_row_monotonicity(ResultTable& t) {
  std::map<std::pair<int, int>, int> lower;
  for (const auto& r : t.rows) lower[{r.u, r.d}] = r.value;
  for (auto& r : t.rows) {
    if (r.status != CellStatus::lower_bound) continue;
    // Best lower bound among cells (d', u) with d' < d.
    int best = 0;
    for (auto it = lower.lower_bound({r.u, 0}); it != lower.end() && it->first.first == r.u && it->first.second < r.d;
         ++it)
      best = std::max(best, it->second);
    if (best > r.value) {
      r.value = best;
      r.from_monotonicity = true;
      lower[{r.u, r.d}] = best;
    }
  }
}

/// "8" for exact cells, "≥26" for lower bounds.
inline std::string display_value(const TableRow& r) {
  return (r.status == CellStatus::lower_bound ? "≥" : "") + std::to_string(r.value);
}

namespace detail {

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

inline std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace detail

inline std::string render_text(const ResultTable& t, bool with_runtime = false) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"d", "u", "chi", "status", "upper", "alpha", "n"};
  if (with_runtime) head.push_back("seconds");
  cells.push_back(head);
  for (const auto& r : t.rows) {
    std::vector<std::string> c = {std::to_string(r.d),
                                  std::to_string(r.u),
                                  display_value(r),
                                  to_string(r.status),
                                  r.upper ? std::to_string(*r.upper) : "-",
                                  detail::opt_str(r.alpha),
                                  std::to_string(r.n)};
    if (with_runtime) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << r.runtime_s;
      c.push_back(os.str());
    }
    cells.push_back(std::move(c));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], detail::display_width(row[k]));
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += "  ";
      out += detail::pad_left(row[k], width[k]);
    }
    out += '\n';
  }
  return out;
}

inline std::string render_csv(const ResultTable& t, bool with_runtime = false) {
  std::string out = "d,u,status,value,upper,alpha,n";
  if (with_runtime) out += ",seconds";
  out += '\n';
  for (const auto& r : t.rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.u) + "," + to_string(r.status) + "," +
           std::to_string(r.value) + "," + (r.upper ? std::to_string(*r.upper) : "") + "," +
           (r.alpha ? std::to_string(*r.alpha) : "") + "," + std::to_string(r.n);
    if (with_runtime) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << r.runtime_s;
      out += "," + os.str();
    }
    out += '\n';
  }
  return out;
}

inline std::string render_json(const ResultTable& t, bool with_runtime = false) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json j;
    j["d"] = r.d;
    j["u"] = r.u;
    j["status"] = to_string(r.status);
    j["value"] = r.value;
    j["display"] = display_value(r);
    j["upper"] = r.upper ? nlohmann::ordered_json(*r.upper) : nlohmann::ordered_json(nullptr);
    j["alpha"] = r.alpha ? nlohmann::ordered_json(*r.alpha) : nlohmann::ordered_json(nullptr);
    j["n"] = r.n;
    j["from_monotonicity"] = r.from_monotonicity;
    if (with_runtime) j["seconds"] = r.runtime_s;
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

}  // namespace udg
