#pragma once

// Brute-force references that share no code with the library: direct
// recursion over multisets and textbook polynomial DP on 64-bit integers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Multiset = std::vector<i64>;  // weakly decreasing

/// Every multiset of values from `allowed` with sum N.
inline std::vector<Multiset> partitions(std::vector<i64> allowed, i64 N) {
  std::sort(allowed.rbegin(), allowed.rend());
  std::vector<Multiset> out;
  Multiset cur;
  std::function<void(std::size_t, i64)> rec = [&](std::size_t idx, i64 rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = idx; j < allowed.size(); ++j) {
      if (allowed[j] > rest) continue;
      cur.push_back(allowed[j]);
      rec(j, rest - allowed[j]);
      cur.pop_back();
    }
  };
  rec(0, N);
  return out;
}

inline std::vector<i64> range(i64 lo, i64 hi) {
  std::vector<i64> v;
  for (i64 i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

inline i64 freq(const Multiset& m, i64 part) { return std::count(m.begin(), m.end(), part); }

/// |D(L,s)| at N by listing.
inline i64 count_D(i64 L, i64 s, i64 N) {
  if (N == 0) return 0;
  return static_cast<i64>(partitions(range(s + 1, L + s), N).size());
}

/// |I(L,s,k)| at N: smallest part s, parts <= L+s, no k.
inline i64 count_I(i64 L, i64 s, i64 k, i64 N) {
  if (N < s) return 0;
  std::vector<i64> allowed;
  for (i64 p = s; p <= L + s; ++p)
    if (p != k) allowed.push_back(p);
  i64 c = 0;
  for (const auto& m : partitions(allowed, N - s)) {
    (void)m;
    ++c;
  }
  return c;
}

/// Number of partitions of n into parts from `parts`, n = 0..T (coin DP).
inline std::vector<i64> restricted_counts(const std::vector<i64>& parts, i64 T) {
  std::vector<i64> c(static_cast<std::size_t>(T + 1), 0);
  c[0] = 1;
  for (i64 p : parts)
    for (i64 n = p; n <= T; ++n) c[n] += c[n - p];
  return c;
}

/// H_{L,s,k} up to T from the product definition, via coin DP.
inline std::vector<i64> h_coeffs(i64 L, i64 s, i64 k, i64 T) {
  const auto inv_full = restricted_counts(range(s, L + s), T);       // 1/(q^s;q)_{L+1}
  const auto inv_tail = restricted_counts(range(s + 1, L + s), T);   // 1/(q^{s+1};q)_L
  std::vector<i64> h(static_cast<std::size_t>(T + 1), 0);
  for (i64 n = 0; n <= T; ++n) {
    i64 v = 0;
    if (n - s >= 0) v += inv_full[n - s];
    if (n - s - k >= 0) v -= inv_full[n - s - k];
    v -= inv_tail[n] - (n == 0 ? 1 : 0);
    h[n] = v;
  }
  return h;
}

/// Nonnegative (x, y) with a x + b y = n and least x, or {-1,-1}.
inline std::pair<i64, i64> least_x(i64 a, i64 b, i64 n) {
  for (i64 x = 0; a * x <= n; ++x)
    if ((n - a * x) % b == 0) return {x, (n - a * x) / b};
  return {-1, -1};
}

inline bool representable(i64 a, i64 b, i64 n) { return least_x(a, b, n).first >= 0; }

}  // namespace oracle
