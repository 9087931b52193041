// Exact linear programming for small systems.
//
// maximize(A, b, c) solves  max c.x  s.t.  A x <= b  with x free, by running a
// two-phase simplex (Bland's rule) on the dual  min b.y  s.t.  A^T y = c,
// y >= 0.  The dual has one row per variable, so the tableau stays tiny even
// when A has hundreds of rows.  T must be an exact ordered field.

#ifndef HELPKIT_LP_HPP_
#define HELPKIT_LP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace helpkit::lp {

enum class Outcome {
  optimal,
  primal_infeasible,   // dual unbounded
  dual_infeasible,     // primal infeasible or unbounded in direction c
};

template <class T>
struct Result {
  Outcome outcome;
  T value{};  // valid when optimal
};

namespace detail {

template <class T>
class Tableau {
public:
  using Row = std::vector<T>;

  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows, Row(cols + 1)), basis_(rows), live_(rows, true) {}

  Row& row(std::size_t r) { return rows_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }
  void kill(std::size_t r) { live_[r] = false; }
  bool live(std::size_t r) const { return live_[r]; }

  void pivot(std::size_t r, std::size_t col, Row& obj) {
    Row& p = rows_[r];
    const T inv = T(1) / p[col];
    for (auto& v : p)
      if (v != 0)
        v *= inv;
    auto eliminate = [&](Row& x) {
      if (x[col] == 0)
        return;
      const T f = x[col];
      for (std::size_t j = 0; j < x.size(); ++j)
        if (p[j] != 0)
          x[j] -= f * p[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r && live_[i])
        eliminate(rows_[i]);
    eliminate(obj);
    basis_[r] = col;
  }

  // Minimizes the objective whose reduced costs are obj[0..limit); obj.back()
  // holds minus the current value.  Returns false when unbounded.
  bool minimize(Row& obj, std::size_t limit) {
    const std::size_t rhs = cols();
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit)
        return true;
      std::optional<std::size_t> leave;
      T best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!live_[r] || rows_[r][enter] <= 0)
          continue;
        T ratio = rows_[r][rhs] / rows_[r][enter];
        if (!leave || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave)
        return false;
      pivot(*leave, enter, obj);
    }
  }

private:
  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> live_;
};

}  // namespace detail

/// A is m x n (row-major), b has m entries, c has n entries.
template <class T>
Result<T> maximize(const std::vector<std::vector<T>>& A,
                   const std::vector<T>& b, const std::vector<T>& c) {
  const std::size_t m = A.size(), n = c.size();
  const std::size_t cols = m + n;  // dual variables, then artificials
  detail::Tableau<T> tab(n, cols);
  for (std::size_t j = 0; j < n; ++j) {
    const bool flip = c[j] < 0;
    auto& r = tab.row(j);
    for (std::size_t i = 0; i < m; ++i)
      r[i] = flip ? T(-A[i][j]) : A[i][j];
    r[m + j] = 1;
    r[cols] = flip ? T(-c[j]) : c[j];
    tab.basis(j) = m + j;
  }

  // Phase I: minimize the sum of artificials.
  typename detail::Tableau<T>::Row obj(cols + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      obj[i] -= tab.row(j)[i];
  for (std::size_t j = 0; j < n; ++j)
    obj[cols] -= tab.row(j)[cols];
  tab.minimize(obj, cols);
  if (obj[cols] != 0)
    return {Outcome::dual_infeasible, {}};

  for (std::size_t r = 0; r < n; ++r) {
    if (tab.basis(r) < m)
      continue;
    std::size_t col = m;
    for (std::size_t j = 0; j < m; ++j)
      if (tab.row(r)[j] != 0) {
        col = j;
        break;
      }
    if (col == m)
      tab.kill(r);  // redundant equality
    else
      tab.pivot(r, col, obj);
  }

  // Phase II over the dual variables only.
  typename detail::Tableau<T>::Row cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    cost[i] = b[i];
  for (std::size_t r = 0; r < n; ++r) {
    if (!tab.live(r))
      continue;
    const T cb = tab.basis(r) < m ? b[tab.basis(r)] : T(0);
    if (cb == 0)
      continue;
    for (std::size_t j = 0; j <= cols; ++j)
      if (tab.row(r)[j] != 0)
        cost[j] -= cb * tab.row(r)[j];
  }
  if (!tab.minimize(cost, m))
    return {Outcome::primal_infeasible, {}};
  return {Outcome::optimal, T(-cost[cols])};
}

}  // namespace helpkit::lp

#endif  // HELPKIT_LP_HPP_
