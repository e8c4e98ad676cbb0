#include "conjlat/matrixops.hpp"

#include <utility>

namespace conjlat {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  IntMatrix r(n, IntVector(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  int n = static_cast<int>(a.size()), m = static_cast<int>(a[0].size());
  IntMatrix r(m, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

IntMatrix permutation_matrix(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  IntMatrix p(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) p[perm[i]][i] = 1;
  return p;
}

Int bareiss_determinant(IntMatrix m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int integer_rank(IntMatrix m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Int f1 = m[rank][c], f2 = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * f1 - m[rank][j] * f2;
    }
    ++rank;
  }
  return rank;
}

bool is_positive_definite(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  for (int k = 1; k <= n; ++k) {
    IntMatrix minor(k, IntVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
    if (bareiss_determinant(std::move(minor)) <= 0) return false;
  }
  return true;
}

bool is_positive_semidefinite(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g[i][j]);
  // Symmetric Gaussian elimination; a PSD matrix with a zero diagonal pivot
  // must have a zero row there.
  for (int k = 0; k < n; ++k) {
    if (a[k][k] < 0) return false;
    if (a[k][k] == 0) {
      for (int j = k; j < n; ++j)
        if (a[k][j] != 0) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

Int dot(const IntVector& x, const IntMatrix& g, const IntVector& y) {
  Int s = 0;
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < n; ++j) row += g[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

}  // namespace conjlat
