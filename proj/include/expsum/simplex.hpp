#pragma once

#include <optional>
#include <vector>

#include "expsum/numeric.hpp"

namespace expsum {

// Exact rational linear programming, two-phase primal simplex with Bland's
// rule. Problem sizes here are tiny (Newton polyhedra with <= 20 generators),
// so a dense tableau over cpp_rational is the simplest sound choice; no
// floating point anywhere.

// minimize c^T x  subject to  A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<Rat> c;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

namespace lpdetail {

class Tableau {
 public:
  // rows: m x (n + 1), last column is the rhs; basis[i] = basic column of row i.
  std::vector<std::vector<Rat>> rows;
  std::vector<int> basis;
  int ncols;  // number of structural columns

  void pivot(int r, int col) {
    Rat piv = rows[r][col];
    for (auto& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = rows[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Bland's rule on the cost vector (length ncols). Returns false on
  // unboundedness.
  bool iterate(const std::vector<Rat>& cost, bool& unbounded) {
    unbounded = false;
    for (;;) {
      // Reduced costs: c_j - c_B . column_j.
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        Rat red = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const Rat& cb = cost[basis[i]];
          if (cb != 0) red -= cb * rows[i][j];
        }
        if (red < 0) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) { unbounded = true; return false; }
      pivot(leave, enter);
    }
  }
};

}  // namespace lpdetail

inline LPResult solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.A.size());
  const int n = static_cast<int>(lp.c.size());
  for (const auto& row : lp.A)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("solve_lp: ragged A");
  if (static_cast<int>(lp.b.size()) != m) throw std::invalid_argument("solve_lp: bad b");

  lpdetail::Tableau t;
  t.ncols = n + m;  // structural + artificial
  t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool flip = lp.b[i] < 0;
    for (int j = 0; j < n; ++j) t.rows[i][j] = flip ? -lp.A[i][j] : lp.A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.ncols] = flip ? -lp.b[i] : lp.b[i];
    t.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> cost1(t.ncols, Rat(0));
  for (int j = n; j < t.ncols; ++j) cost1[j] = 1;
  bool unbounded = false;
  t.iterate(cost1, unbounded);
  Rat art = 0;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= n) art += t.rows[i][t.ncols];
  if (art != 0) return {LPStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; drop redundant rows.
  for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) { col = j; break; }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // Phase 2 on the structural columns.
  t.ncols = n;
  for (auto& row : t.rows) {
    Rat rhs = row.back();
    row.resize(n + 1);
    row[n] = rhs;
  }
  std::vector<Rat> cost2 = lp.c;
  t.iterate(cost2, unbounded);
  if (unbounded) return {LPStatus::Unbounded, Rat(0), {}};

  LPResult res;
  res.status = LPStatus::Optimal;
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rows[i][n];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += lp.c[j] * res.x[j];
  return res;
}

// Feasibility of A x = b, x >= 0 (phase 1 only).
inline bool lp_feasible(const LinearProgram& lp) {
  LinearProgram copy = lp;
  copy.c.assign(lp.A.empty() ? lp.c.size() : lp.A[0].size(), Rat(0));
  return solve_lp(copy).status == LPStatus::Optimal;
}

}  // namespace expsum
