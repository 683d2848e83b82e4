#pragma once

// Dense T16-T19 maps on g[0..L+2], specialised per theorem so the exhaustive
// verifier can inline them into its innermost loop.

#include <array>
#include <functional>
#include <vector>

#include "partineq/injections.hpp"

namespace partineq::detail {

struct Gl2Core {
  using Triple = std::array<Int, 3>;  // (x3, x4, x5)

  Int L = 0;
  bool literal = false;
  std::vector<Triple> case1;          // T16 Case 1 solutions for small f
  std::function<Triple(Int)> extend;  // the same beyond the table

  const Triple& case1_solution(Int f, Triple& scratch) const {
    if (f < static_cast<Int>(case1.size())) return case1[static_cast<std::size_t>(f)];
    scratch = extend(f);
    return scratch;
  }

  static Int least_index(const Int* g, Int lo, Int hi, Int min_freq) {
    for (Int i = lo; i <= hi; ++i)
      if (g[i] >= min_freq) return i;
    return 0;
  }

  template <Theorem T>
  Gl2Case apply(Int* g) const;
  template <Theorem T>
  bool decode(Int* g) const;
};

template <>
[[gnu::always_inline]] inline Gl2Case Gl2Core::apply<Theorem::T16>(Int* g) const {
  if (const Int f = g[L]; f > 0) {
    Triple scratch;
    const Triple& t = case1_solution(f, scratch);
    g[2] += 4 * f;
    g[3] += t[0];
    g[4] += t[1];
    g[5] += t[2];
    g[L] = 0;
    return Gl2Case::T16_1;
  }
  if (g[3] == 0 && g[4] == 0) {
    const Int sp = least_index(g, 5, L + 2, 1);
    if (sp == 0) return Gl2Case::NotApplicable;
    if (sp == L + 2 && !literal) {
      // (2, L, ...) would contain the forbidden part L.
      g[2] += 5;
      g[L - 8] += 1;
      g[L + 2] -= 1;
      return Gl2Case::T16_2Atop;
    }
    g[2] += 1;
    g[sp - 2] += 1;
    g[sp] -= 1;
    return Gl2Case::T16_2A;
  }
  if (g[4] >= 1) {
    g[2] += 2;
    g[4] -= 1;
    return Gl2Case::T16_2Bi;
  }
  if (g[3] >= 2) {
    g[2] += 3;
    g[3] -= 2;
    return Gl2Case::T16_2Biia;
  }
  const Int m0 = least_index(g, 5, L + 2, 1);
  if (m0 == 0) return Gl2Case::NotApplicable;
  g[2] += 1;
  g[3] -= 1;
  g[m0] -= 1;
  if (m0 % 2 != 0) {
    g[(m0 + 1) / 2] += 2;
    return Gl2Case::T16_2Biib_alpha;
  }
  g[m0 / 2] += 1;
  g[m0 / 2 + 1] += 1;
  return Gl2Case::T16_2Biib_beta;
}

template <>
[[gnu::always_inline]] inline bool Gl2Core::decode<Theorem::T16>(Int* g) const {
  const Int c = g[2];
  if (c <= 0) return false;
  g[2] = 0;
  if (c % 4 == 0) {
    Triple scratch;
    const Triple& t = case1_solution(c / 4, scratch);
    g[3] -= t[0];
    g[4] -= t[1];
    g[5] -= t[2];
    g[L] = c / 4;
    return true;
  }
  if (c == 5 && !literal) {
    g[L - 8] -= 1;
    g[L + 2] += 1;
    return true;
  }
  if (c == 2) {
    g[4] += 1;
    return true;
  }
  if (c == 3) {
    g[3] += 2;
    return true;
  }
  if (c != 1) return false;
  const Int a = least_index(g, 3, L + 2, 1);
  if (a == 0) return false;
  if (g[a] == 2) {
    const Int m0 = 2 * a - 1;
    if (m0 > L + 2) return false;
    g[a] -= 2;
    g[3] += 1;
    g[m0] += 1;
    return true;
  }
  if (g[a] != 1) return false;
  if (a + 1 <= L + 2 && g[a + 1] >= 1) {
    const Int m0 = 2 * a;
    if (m0 > L + 2) return false;
    g[a] -= 1;
    g[a + 1] -= 1;
    g[3] += 1;
    g[m0] += 1;
    return true;
  }
  if (a + 2 > L + 2) return false;
  g[a] -= 1;
  g[a + 2] += 1;
  return true;
}

template <>
[[gnu::always_inline]] inline Gl2Case Gl2Core::apply<Theorem::T17>(Int* g) const {
  if (const Int f = g[L]; f > 0) {
    g[L] = 0;
    if (f % 2 == 0) {
      g[2] += L * f / 2;
      return Gl2Case::T17_1;
    }
    g[2] += L * (f - 1) / 2 + 1;
    g[L - 2] += 1;
    return Gl2Case::T17_2;
  }
  const Int i0 = least_index(g, 3, L + 2, 2);
  if (i0 == 0) return Gl2Case::NotApplicable;
  if (i0 != L + 1) {
    g[2] += i0;
    g[i0] -= 2;
    return Gl2Case::T17_3i;
  }
  g[2] += 2;
  g[L - 1] += 2;
  g[L + 1] -= 2;
  return Gl2Case::T17_3ii;
}

template <>
[[gnu::always_inline]] inline bool Gl2Core::decode<Theorem::T17>(Int* g) const {
  const Int c = g[2];
  if (c <= 0) return false;
  g[2] = 0;
  if (c == 2) {
    g[L - 1] -= 2;
    g[L + 1] += 2;
    return true;
  }
  if (c % L == 0) {
    g[L] = 2 * (c / L);
    return true;
  }
  if (c % L == 1) {
    g[L] = 2 * (c / L) + 1;
    g[L - 2] -= 1;
    return true;
  }
  if ((c >= 3 && c <= L - 1) || c == L + 2) {
    g[c] += 2;
    return true;
  }
  return false;
}

template <>
[[gnu::always_inline]] inline Gl2Case Gl2Core::apply<Theorem::T18>(Int* g) const {
  const Int f3 = g[3];
  if (f3 > 0 && f3 % 2 == 0) {
    g[2] += 3 * f3 / 2;
    g[3] = 0;
    return Gl2Case::T18_1;
  }
  if (f3 >= 3) {
    g[2] += 3 * (f3 - 3) / 2 + 2;
    g[3] = 0;
    g[5] += 1;
    return Gl2Case::T18_2;
  }
  if (f3 == 1) {
    if (g[4] >= 1) {
      g[2] += 1;
      g[3] = 0;
      g[4] -= 1;
      g[5] += 1;
      return Gl2Case::T18_3i;
    }
    if (g[5] >= 1) {
      g[2] += 4;
      g[3] = 0;
      g[5] -= 1;
      return Gl2Case::T18_3ii;
    }
    return Gl2Case::NotApplicable;
  }
  if (g[4] >= 8) {
    g[2] += 16;
    g[4] -= 8;
    return Gl2Case::T18_4i;
  }
  if (g[5] >= 4) {
    g[2] += 10;
    g[5] -= 4;
    return Gl2Case::T18_4ii;
  }
  return Gl2Case::NotApplicable;
}

template <>
[[gnu::always_inline]] inline bool Gl2Core::decode<Theorem::T18>(Int* g) const {
  const Int c = g[2];
  if (c <= 0) return false;
  g[2] = 0;
  if (c % 3 == 0) {
    g[3] = 2 * (c / 3);
    return true;
  }
  if (c % 3 == 2) {
    g[3] = 2 * ((c - 2) / 3) + 3;
    g[5] -= 1;
    return true;
  }
  switch (c) {
    case 1: g[3] = 1; g[4] += 1; g[5] -= 1; return true;
    case 4: g[3] = 1; g[5] += 1; return true;
    case 16: g[4] += 8; return true;
    case 10: g[5] += 4; return true;
    default: return false;
  }
}

template <>
[[gnu::always_inline]] inline Gl2Case Gl2Core::apply<Theorem::T19>(Int* g) const {
  if (g[4] > 0) {
    g[2] += 2 * g[4];
    g[4] = 0;
    return Gl2Case::T19_1;
  }
  if (g[3] >= 2) {
    g[2] += 3;
    g[3] -= 2;
    return Gl2Case::T19_2i;
  }
  if (g[5] >= 2) {
    g[2] += 5;
    g[5] -= 2;
    return Gl2Case::T19_2ii;
  }
  if (g[6] >= 3) {
    g[2] += 9;
    g[6] -= 3;
    return Gl2Case::T19_2iii;
  }
  return Gl2Case::NotApplicable;
}

template <>
[[gnu::always_inline]] inline bool Gl2Core::decode<Theorem::T19>(Int* g) const {
  const Int c = g[2];
  if (c <= 0) return false;
  g[2] = 0;
  if (c % 2 == 0) {
    g[4] = c / 2;
    return true;
  }
  switch (c) {
    case 3: g[3] += 2; return true;
    case 5: g[5] += 2; return true;
    case 9: g[6] += 3; return true;
    default: return false;
  }
}

}  // namespace partineq::detail
