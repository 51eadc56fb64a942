#include "diffelim/lp.hpp"

#include "diffelim/errors.hpp"

namespace diffelim {

namespace {

struct Tableau {
  // rows 0..m-1 constraints, last column is the right-hand side; obj is the reduced-cost row
  // with obj.back() = -(objective value).
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> obj;
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int c) {
    auto& pr = t[static_cast<std::size_t>(r)];
    Rational inv = 1 / pr[static_cast<std::size_t>(c)];
    for (auto& v : pr) v *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      Rational f = row[static_cast<std::size_t>(c)];
      if (f == 0) return;
      for (std::size_t k = 0; k < row.size(); ++k)
        if (pr[k] != 0) row[k] -= f * pr[k];
    };
    for (std::size_t i = 0; i < t.size(); ++i)
      if (static_cast<int>(i) != r) eliminate(t[i]);
    eliminate(obj);
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Returns false when unbounded. Columns >= limit never enter.
  bool run(int limit) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < limit; ++c)
        if (obj[static_cast<std::size_t>(c)] < 0) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < t.size(); ++r) {
        const Rational& a = t[r][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        Rational ratio = t[r].back() / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[static_cast<std::size_t>(leave)])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw ConfigurationError("lp: row count mismatch");
  Tableau tb;
  tb.ncols = n + m;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(n + m + 1));
    bool neg = b[static_cast<std::size_t>(i)] < 0;
    for (int j = 0; j < n; ++j) {
      const Rational& a = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(j)] = neg ? Rational(-a) : a;
    }
    row[static_cast<std::size_t>(n + i)] = 1;
    row.back() = neg ? Rational(-b[static_cast<std::size_t>(i)]) : b[static_cast<std::size_t>(i)];
    tb.t.push_back(std::move(row));
    tb.basis.push_back(n + i);
  }
  // Phase 1: minimize the sum of artificials.
  tb.obj.assign(static_cast<std::size_t>(n + m + 1), 0);
  for (const auto& row : tb.t)
    for (int j = 0; j < n; ++j) tb.obj[static_cast<std::size_t>(j)] -= row[static_cast<std::size_t>(j)];
  for (const auto& row : tb.t) tb.obj.back() -= row.back();
  tb.run(n);
  LpResult res;
  if (tb.obj.back() != 0) return res;
  // Drive artificials out of the basis; drop redundant rows.
  for (int r = 0; r < static_cast<int>(tb.t.size());) {
    if (tb.basis[static_cast<std::size_t>(r)] < n) {
      ++r;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tb.t[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tb.pivot(r, col);
      ++r;
    } else {
      tb.t.erase(tb.t.begin() + r);
      tb.basis.erase(tb.basis.begin() + r);
    }
  }
  // Phase 2.
  tb.obj.assign(static_cast<std::size_t>(n + m + 1), 0);
  for (int j = 0; j < n; ++j) tb.obj[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
  for (std::size_t r = 0; r < tb.t.size(); ++r) {
    Rational f = tb.obj[static_cast<std::size_t>(tb.basis[r])];
    if (f == 0) continue;
    for (std::size_t k = 0; k < tb.obj.size(); ++k)
      if (tb.t[r][k] != 0) tb.obj[k] -= f * tb.t[r][k];
  }
  if (!tb.run(n)) {
    res.status = LpStatus::kUnbounded;
    return res;
  }
  res.status = LpStatus::kOptimal;
  res.x.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> basic(static_cast<std::size_t>(n), false);
  for (std::size_t r = 0; r < tb.t.size(); ++r) {
    res.x[static_cast<std::size_t>(tb.basis[r])] = tb.t[r].back();
    basic[static_cast<std::size_t>(tb.basis[r])] = true;
    if (tb.t[r].back() == 0) res.degenerate = true;
  }
  res.value = -tb.obj.back();
  res.unique = true;
  for (int j = 0; j < n; ++j)
    if (!basic[static_cast<std::size_t>(j)] && tb.obj[static_cast<std::size_t>(j)] == 0) res.unique = false;
  return res;
}

bool lp_feasible(const RationalMatrix& A, const std::vector<Rational>& b) {
  std::size_t n = A.empty() ? 0 : A[0].size();
  return lp_minimize(A, b, std::vector<Rational>(n, 0)).status == LpStatus::kOptimal;
}

}  // namespace diffelim
