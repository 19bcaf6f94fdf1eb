#include "heatframe/linalg.hpp"

#include <stdexcept>

namespace heatframe {

std::vector<size_t> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size();
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = m[row][col].inverse();
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  if (rows == 0) {
    // no constraints: everything is free
    LinearSolution s;
    s.consistent = true;
    s.particular.assign(cols, Rational(0));
    for (size_t j = 0; j < cols; ++j) {
      std::vector<Rational> v(cols, Rational(0));
      v[j] = Rational(1);
      s.kernel.push_back(std::move(v));
    }
    return s;
  }

  std::vector<size_t> pivots = rref(a);
  LinearSolution s;

  // inconsistent iff a pivot lands in the augmented column
  for (size_t col : pivots) {
    if (col == cols) return s;  // 0 = 1
  }

  s.consistent = true;
  s.particular.assign(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    s.particular[pivots[r]] = a[r][cols];
  }
  for (size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[j] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][j];
    s.kernel.push_back(std::move(v));
  }
  return s;
}

}  // namespace heatframe
