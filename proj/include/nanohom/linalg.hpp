#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <limits>
#include <vector>

namespace nanohom::linalg {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const Int q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

inline Int mod(Int x, Int m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// Row-style Hermite normal form (row echelon with positive pivots, entries above pivots reduced).
inline Matrix hermite(Matrix rows) {
  if (rows.empty()) return rows;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      auto [g, s, t] = egcd(rows[r][c], rows[i][c]);
      const Int a = rows[r][c] / g, b = rows[i][c] / g;
      for (size_t j = 0; j < cols; ++j) {
        const Int x = rows[r][j], y = rows[i][j];
        rows[r][j] = s * x + t * y;
        rows[i][j] = -b * x + a * y;
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      const Int q = rows[i][c] >= 0 ? rows[i][c] / rows[r][c]
                                    : -((-rows[i][c] + rows[r][c] - 1) / rows[r][c]);
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Exact membership of x in the lattice spanned by the rows.
inline bool lattice_contains(const Matrix& rows, std::vector<Int> x) {
  const Matrix h = hermite(rows);
  size_t c = 0;
  for (const auto& row : h) {
    while (c < x.size() && row[c] == 0) {
      if (x[c] != 0) return false;
      ++c;
    }
    if (c == x.size()) break;
    if (x[c] % row[c] != 0) return false;
    const Int q = x[c] / row[c];
    for (size_t j = 0; j < x.size(); ++j) x[j] -= q * row[j];
    ++c;
  }
  for (Int v : x)
    if (v != 0) return false;
  return true;
}

inline Int inverse_mod(Int a, Int p);

// Number of x in (Z/q)^n with A x = b for q = p^k, by diagonalization with pivots of minimal
// p-adic valuation (every other entry of the remaining block is then a multiple of the pivot).
inline Int count_solutions_prime_power(Matrix A, std::vector<Int> b, Int p, Int q) {
  const size_t R = A.size();
  const size_t C = R ? A[0].size() : 0;
  for (auto& row : A)
    for (auto& x : row) x = mod(x, q);
  for (auto& x : b) x = mod(x, q);
  auto val = [&](Int x) {
    if (x == 0) return std::numeric_limits<int>::max();
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
  };
  Int count = 1;
  size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    size_t pi = R, pj = C;
    int best = std::numeric_limits<int>::max();
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j)
        if (const int v = val(A[i][j]); v < best) best = v, pi = i, pj = j;
    if (pi == R) break;
    std::swap(A[t], A[pi]);
    std::swap(b[t], b[pi]);
    for (auto& row : A) std::swap(row[t], row[pj]);
    Int pv = 1;
    for (int i = 0; i < best; ++i) pv *= p;
    const Int unit_inv = inverse_mod(A[t][t] / pv, q);
    for (size_t i = t + 1; i < R; ++i) {
      if (A[i][t] == 0) continue;
      const Int f = mod((A[i][t] / pv) * unit_inv, q);
      for (size_t j = t; j < C; ++j) A[i][j] = mod(A[i][j] - f * A[t][j], q);
      b[i] = mod(b[i] - f * b[t], q);
    }
    for (size_t j = t + 1; j < C; ++j) {
      if (A[t][j] == 0) continue;
      const Int f = mod((A[t][j] / pv) * unit_inv, q);
      for (size_t i = t; i < R; ++i) A[i][j] = mod(A[i][j] - f * A[i][t], q);
    }
    if (b[t] % pv != 0) return 0;
    count *= pv;
  }
  for (size_t i = t; i < R; ++i)
    if (b[i] != 0) return 0;
  for (size_t j = t; j < C; ++j) count *= q;
  return count;
}

// Number of x in (Z/m)^n with A x = b (mod m): Smith-type diagonalization on each prime-power
// factor of m, combined by the Chinese remainder theorem.
inline Int count_solutions_smith(const Matrix& A, const std::vector<Int>& b, Int m) {
  Int count = 1, rest = m;
  for (Int p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p) continue;
    Int q = 1;
    while (rest % p == 0) rest /= p, q *= p;
    count *= count_solutions_prime_power(A, b, p, q);
    if (count == 0) return 0;
  }
  return count;
}

inline Int inverse_mod(Int a, Int p) {
  auto [g, s, t] = egcd(mod(a, p), p);
  if (g != 1) throw std::domain_error("not invertible");
  return mod(s, p);
}

// Same count for prime p by Gaussian elimination.
inline Int count_solutions_prime(Matrix A, std::vector<Int> b, Int p) {
  const size_t R = A.size();
  const size_t C = R ? A[0].size() : 0;
  for (auto& row : A)
    for (auto& x : row) x = mod(x, p);
  for (auto& x : b) x = mod(x, p);
  size_t rank = 0;
  for (size_t c = 0; c < C && rank < R; ++c) {
    size_t piv = rank;
    while (piv < R && A[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(A[rank], A[piv]);
    std::swap(b[rank], b[piv]);
    const Int inv = inverse_mod(A[rank][c], p);
    for (auto& x : A[rank]) x = mod(x * inv, p);
    b[rank] = mod(b[rank] * inv, p);
    for (size_t i = 0; i < R; ++i) {
      if (i == rank || A[i][c] == 0) continue;
      const Int f = A[i][c];
      for (size_t j = 0; j < C; ++j) A[i][j] = mod(A[i][j] - f * A[rank][j], p);
      b[i] = mod(b[i] - f * b[rank], p);
    }
    ++rank;
  }
  for (size_t i = rank; i < R; ++i)
    if (b[i] != 0) return 0;
  Int count = 1;
  for (size_t j = rank; j < C; ++j) count *= p;
  return count;
}

inline bool is_prime(Int m) {
  if (m < 2) return false;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

}  // namespace nanohom::linalg
