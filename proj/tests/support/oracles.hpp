#pragma once

// Slow reference implementations for the tests. Nothing here calls into the
// library's arithmetic, so agreement is evidence rather than tautology.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using u64 = std::uint64_t;
using boost::multiprecision::cpp_int;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 gcd(u64 a, u64 b) {
  while (b) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += gcd(k, n) == 1;
  return count;
}

// Least h >= 1 with a^h = 1 mod b, by repeated multiplication.
inline u64 order(u64 a, u64 b) {
  a %= b;
  u64 x = a;
  for (u64 h = 1; h <= b; ++h) {
    if (x == 1 % b) return h;
    x = static_cast<u64>(static_cast<unsigned __int128>(x) * a % b);
  }
  return 0;
}

inline u64 pow_mod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  for (u64 i = 0; i < e; ++i) r = static_cast<u64>(static_cast<unsigned __int128>(r) * a % n);
  return r;
}

// Exact determinant by cofactor expansion along the first row.
inline cpp_int det_laplace(const std::vector<std::vector<cpp_int>>& a) {
  const std::size_t m = a.size();
  if (m == 1) return a[0][0];
  cpp_int total = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t i = 1; i < m; ++i) {
      std::vector<cpp_int> row;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const cpp_int term = a[0][j] * det_laplace(minor);
    total += j % 2 == 0 ? term : cpp_int(-term);
  }
  return total;
}

// det of multiplication by a in Z_n[x]/(x^m - r), reduced into [0, n).
// The matrix is built column by column from a * x^j, not from the closed form.
inline u64 unital_det(const std::vector<u64>& a, u64 n, u64 r) {
  const std::size_t m = a.size();
  std::vector<std::vector<cpp_int>> mat(m, std::vector<cpp_int>(m));
  std::vector<cpp_int> col(a.begin(), a.end());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) mat[i][j] = col[i] % n;
    // col <- col * x, folding x^m = r
    const cpp_int top = col[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = top * r;
  }
  cpp_int d = det_laplace(mat) % n;
  if (d < 0) d += n;
  return static_cast<u64>(d);
}

// Number of monic irreducibles of degree d over F_q (Moebius inversion).
inline cpp_int monic_irreducible_count(u64 q, unsigned d) {
  auto mu = [](unsigned k) {
    int s = 1;
    for (unsigned p = 2; p <= k; ++p) {
      if (k % p) continue;
      k /= p;
      if (k % p == 0) return 0;
      s = -s;
    }
    return s;
  };
  cpp_int total = 0;
  for (unsigned k = 1; k <= d; ++k) {
    if (d % k) continue;
    cpp_int term = boost::multiprecision::pow(cpp_int(q), d / k);
    total += mu(k) * term;
  }
  return total / d;
}

}  // namespace oracle
