#include <gtest/gtest.h>

#include "udg/table.hpp"

using namespace udg;

namespace {

std::vector<int> row_values(int u, int lo, int hi) {
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) {
    const auto r = compute_cell(d, u);
    EXPECT_EQ(r.status, CellStatus::exact) << d << "," << u;
    out.push_back(r.value);
  }
  return out;
}

}  // namespace

TEST(ComputeCell, RowU2) { EXPECT_EQ(row_values(2, 2, 7), (std::vector<int>{2, 4, 4, 8, 8, 8})); }
TEST(ComputeCell, RowU4) { EXPECT_EQ(row_values(4, 2, 7), (std::vector<int>{1, 1, 2, 4, 7, 8})); }
TEST(ComputeCell, RowU6) { EXPECT_EQ(row_values(6, 2, 7), (std::vector<int>{1, 1, 1, 1, 2, 4})); }

TEST(ComputeCell, ExactRowsRespectRatioBound) {
  int with_alpha = 0;
  for (int u = 2; u <= 6; u += 2)
    for (int d = 2; d <= 7; ++d) {
      const auto r = compute_cell(d, u);
      if (!r.alpha) continue;  // clique and greedy bounds met, no MIS solve needed
      ++with_alpha;
      EXPECT_GE(r.value, ratio_lower_bound(r.n, *r.alpha));
    }
  EXPECT_GT(with_alpha, 0);
  const auto r = compute_cell(7, 4);
  EXPECT_EQ(r.n, 128);
}

TEST(ComputeCell, BudgetDegradesToBracket) {
  SearchBudget b;
  b.max_nodes = 200;
  const auto r = compute_cell(8, 6, b);
  EXPECT_EQ(r.status, CellStatus::lower_bound);
  ASSERT_TRUE(r.upper.has_value());
  EXPECT_LE(r.value, *r.upper);
}

TEST(DisplayValue, Examples) {
  TableRow exact;
  exact.d = 5;
  exact.u = 2;
  exact.value = 8;
  EXPECT_EQ(display_value(exact), "8");
  TableRow lower;
  lower.d = 10;
  lower.u = 4;
  lower.status = CellStatus::lower_bound;
  lower.value = ratio_lower_bound(512, 20);
  EXPECT_EQ(display_value(lower), "≥26");
}

TEST(Render, EmptyTableIsHeaderOnly) {
  ResultTable t;
  EXPECT_EQ(render_text(t), "d  u  chi  status  upper  alpha  n\n");
  EXPECT_EQ(render_csv(t), "d,u,status,value,upper,alpha,n\n");
  EXPECT_EQ(render_json(t), "[]\n");
}

TEST(Render, RowsAreAlignedAndDeterministic) {
  ResultTable t;
  TableRow a;
  a.d = 5;
  a.u = 2;
  a.value = 8;
  a.alpha = 4;
  a.n = 32;
  TableRow b;
  b.d = 10;
  b.u = 4;
  b.status = CellStatus::lower_bound;
  b.value = 26;
  b.upper = 40;
  b.n = 1024;
  t.rows = {a, b};
  const std::string expected =
      " d  u  chi       status  upper  alpha     n\n"
      " 5  2    8        exact      -      4    32\n"
      "10  4  ≥26  lower-bound     40      -  1024\n";
  EXPECT_EQ(render_text(t), expected);
  EXPECT_EQ(render_csv(t), "d,u,status,value,upper,alpha,n\n5,2,exact,8,,4,32\n10,4,lower-bound,26,40,,1024\n");
  const auto j = nlohmann::json::parse(render_json(t));
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[1]["display"], "≥26");
  EXPECT_TRUE(j[1]["alpha"].is_null());
}

TEST(Monotonicity, RaisesLowerBoundCells) {
  ResultTable t;
  TableRow left;
  left.d = 7;
  left.u = 6;
  left.value = 4;
  TableRow right;
  right.d = 8;
  right.u = 6;
  right.status = CellStatus::lower_bound;
  right.value = 3;
  TableRow other;
  other.d = 8;
  other.u = 4;
  other.status = CellStatus::lower_bound;
  other.value = 2;
  t.rows = {left, right, other};
  apply_row_monotonicity(t);
  EXPECT_EQ(t.rows[1].value, 4);
  EXPECT_TRUE(t.rows[1].from_monotonicity);
  EXPECT_EQ(t.rows[2].value, 2);
  EXPECT_EQ(t.rows[0].value, 4);
}
