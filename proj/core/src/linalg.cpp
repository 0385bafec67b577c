#include "polyalg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace polyalg {

SparseVector EchelonBasis::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int pivot = it->first;
    const Rational factor = it->second;
    for (const auto& [col, val] : row->second) {
      auto& entry = v[col];
      entry -= factor * val;
    }
    for (auto jt = v.begin(); jt != v.end();) {
      if (jt->second == 0) jt = v.erase(jt);
      else ++jt;
    }
    it = v.upper_bound(pivot);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0) it = v.erase(it);
    else ++it;
  }
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.begin()->second;
  for (auto& [col, val] : v) val /= lead;
  const int pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0) it = v.erase(it);
    else ++it;
  }
  return reduce(std::move(v)).empty();
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rational lead = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(Matrix m, const std::vector<Rational>& b, std::size_t cols) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  SolveResult result;
  if (!pivots.empty() && static_cast<std::size_t>(pivots.back()) == cols) return result;
  result.consistent = true;
  result.unique = pivots.size() == cols;
  result.solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) result.solution[pivots[i]] = m[i][cols];
  return result;
}

Integer lattice_determinant(std::vector<std::vector<Integer>> rows, std::size_t m) {
  // Integer row reduction column by column (Euclid on each column).
  std::size_t r = 0;
  Integer det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) return 0;  // not full rank
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < m; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    det *= abs(rows[r][c]);
    ++r;
  }
  return det;
}

}  // namespace polyalg
