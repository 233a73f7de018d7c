// Small exact dense linear algebra over a field context: row reduction,
// rank, kernels, subspace comparison. Sizes here are tiny (tens of rows),
// so plain Gaussian elimination is all we need.
#pragma once

#include <vector>

#include "graphcurve/field.hpp"

namespace graphcurve {

template <class K>
struct Mat {
  using Elem = typename K::Elem;
  int rows = 0;
  int cols = 0;
  K field{};
  std::vector<Elem> a;  // row-major

  Mat() = default;
  Mat(int r, int c, const K& f)
      : rows(r), cols(c), field(f), a(std::size_t(r) * c, f.zero()) {}

  Elem& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Elem& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  const auto& F = m.field;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!F.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    auto inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || F.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {x : m x = 0}, one vector per non-pivot column.
template <class K>
std::vector<std::vector<typename K::Elem>> kernel_basis(Mat<K> m) {
  const auto& F = m.field;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::Elem>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename K::Elem> v(m.cols, F.zero());
    v[c] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(m.at(static_cast<int>(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
Mat<K> mat_from_rows(const std::vector<std::vector<typename K::Elem>>& rows,
                     int cols, const K& f) {
  Mat<K> m(static_cast<int>(rows.size()), cols, f);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

// Row-space containment: every row of `sub` lies in the row space of `sup`.
template <class K>
bool row_space_contains(const std::vector<std::vector<typename K::Elem>>& sup,
                        const std::vector<std::vector<typename K::Elem>>& sub,
                        int cols, const K& f) {
  auto m = mat_from_rows<K>(sup, cols, f);
  int base = static_cast<int>(rref(m).size());
  for (auto& v : sub) {
    auto rows = sup;
    rows.push_back(v);
    if (rank(mat_from_rows<K>(rows, cols, f)) != base) return false;
  }
  return true;
}

template <class K>
bool row_space_equal(const std::vector<std::vector<typename K::Elem>>& a,
                     const std::vector<std::vector<typename K::Elem>>& b,
                     int cols, const K& f) {
  return row_space_contains<K>(a, b, cols, f) &&
         row_space_contains<K>(b, a, cols, f);
}

}  // namespace graphcurve
