// Small exact linear algebra: 3x3 matrices over a field plus a generic
// Gaussian solver used for conic fitting and kernel computations.
#ifndef CREMONA_LINALG_HPP
#define CREMONA_LINALG_HPP

#include <array>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace cremona {

template <typename K>
struct Mat3 {
  std::array<std::array<K, 3>, 3> a;  // a[row][col]

  static Mat3 from_columns(const std::array<K, 3>& c0, const std::array<K, 3>& c1,
                           const std::array<K, 3>& c2) {
    Mat3 m;
    for (int r = 0; r < 3; ++r) m.a[r] = {c0[r], c1[r], c2[r]};
    return m;
  }
  static Mat3 identity_like(const K& one) {
    Mat3 m;
    K zero = one.zero_like();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.a[r][c] = (r == c) ? one : zero;
    return m;
  }

  std::array<K, 3> apply(const std::array<K, 3>& v) const {
    std::array<K, 3> r = {a[0][0].zero_like(), a[0][0].zero_like(), a[0][0].zero_like()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] = r[i] + a[i][j] * v[j];
    return r;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        K s = a[0][0].zero_like();
        for (int k = 0; k < 3; ++k) s = s + a[i][k] * o.a[k][j];
        r.a[i][j] = s;
      }
    return r;
  }

  K det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  Mat3 inverse() const {
    K d = det();
    check(!d.is_zero(), ErrorKind::SingularMatrix, "3x3 matrix is singular");
    K id = d.inv();
    Mat3 r;
    auto cof = [&](int i, int j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      return a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a[i][j] = cof(j, i) * id;  // adjugate transpose
    return r;
  }
};

// Solves A x = b by Gaussian elimination; A is m x n (rows of length n).
// Returns one solution, or nullopt if inconsistent. Free variables are set
// to zero, so the result is deterministic.
template <typename K>
std::optional<std::vector<K>> gauss_solve(std::vector<std::vector<K>> A, std::vector<K> b) {
  const std::size_t m = A.size();
  check(b.size() == m, ErrorKind::Internal, "gauss_solve shape mismatch");
  const std::size_t n = m ? A[0].size() : 0;
  K zero = m && n ? A[0][0].zero_like() : K{};
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && A[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(A[sel], A[row]);
    std::swap(b[sel], b[row]);
    K inv = A[row][col].inv();
    for (std::size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
    b[row] = b[row] * inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      K f = A[r][col];
      for (std::size_t j = col; j < n; ++j) A[r][j] = A[r][j] - f * A[row][j];
      b[r] = b[r] - f * b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  std::vector<K> x(n, zero);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[static_cast<std::size_t>(pivot_col[r])] = b[r];
  return x;
}

}  // namespace cremona

#endif  // CREMONA_LINALG_HPP
