#pragma once
// Independent brute-force helpers used to freeze expected values.

#include <cstdint>
#include <vector>

namespace oracle {

using IMat = std::vector<std::vector<long>>;

inline long mod(long a, long p) { return ((a % p) + p) % p; }

inline long det_mod(IMat m, long p) {
  long n = static_cast<long>(m.size()), det = 1;
  for (long c = 0; c < n; ++c) {
    long piv = -1;
    for (long r = c; r < n; ++r)
      if (mod(m[r][c], p)) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(m[piv], m[c]); det = mod(-det, p); }
    long a = mod(m[c][c], p), inv = 1;
    for (long e = 0; e < p - 2; ++e) inv = mod(inv * a, p);  // a^(p-2)
    det = mod(det * a, p);
    for (long r = c + 1; r < n; ++r) {
      long f = mod(m[r][c] * inv, p);
      for (long k = c; k < n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
    }
  }
  return det;
}

// Number of n x n matrices over F_p with determinant 1 (resp. nonzero).
inline std::size_t count_det(int n, long p, bool unimodular) {
  std::size_t total = 1, hits = 0;
  for (int i = 0; i < n * n; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    IMat m(n, std::vector<long>(n));
    std::size_t x = code;
    for (int i = 0; i < n * n; ++i) { m[i / n][i % n] = static_cast<long>(x % p); x /= p; }
    long d = det_mod(m, p);
    if (unimodular ? d == 1 : d != 0) ++hits;
  }
  return hits;
}

}  // namespace oracle
