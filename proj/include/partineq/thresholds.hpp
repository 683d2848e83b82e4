#pragma once

#include <optional>
#include <string>

#include "partineq/types.hpp"

namespace partineq {

/// multiplier * (base^exponent + addend), kept symbolic when the power is
/// too large to materialise.
struct HugeValue {
  BigInt multiplier;
  BigInt base;
  BigInt exponent;
  BigInt addend;
  std::optional<BigInt> exact;
  double log10 = 0.0;

  /// Exact value if present, otherwise a `~10^x` summary.
  std::string to_string() const;
};

/// Largest power (in bits) that HugeValue materialises by default.
inline constexpr Int kDefaultExactBits = Int{1} << 22;

struct Thresholds {
  Int L = 0;
  Int s = 0;
  BigInt F, kappa;        // k = L+s-1, L >= s+3
  BigInt Fp, kappap;      // 2s+2 <= k <= L+s
  BigInt Fpp, kappapp;    // s+1 <= k <= 2s+1, L >= 3s+3
  BigInt P;               // (s+1)(s+2)...(s+L)
  HugeValue gamma;        // gamma(L, s)
  HugeValue Gamma;        // gamma(3s+2, s)
  Int N_L = 0;            // L(L+3)/2 + 2
};

BigInt threshold_F(Int s);
BigInt threshold_kappa(Int s);
BigInt threshold_Fp(Int s);
BigInt threshold_kappap(Int s);
BigInt threshold_Fpp(Int s);
BigInt threshold_kappapp(Int s);

/// (s+1)(s+2)...(s+L).
BigInt product_P(Int L, Int s);

/// ((s+1)+...+(s+L)) * (P^{(P^2-1)L+2} + ((P^2-1)L-2) P).
HugeValue gamma_value(Int L, Int s, Int max_exact_bits = kDefaultExactBits);

/// gamma(3s+2, s).
HugeValue Gamma_value(Int s, Int max_exact_bits = kDefaultExactBits);

/// L(L+3)/2 + 2.
Int n_L(Int L);

/// Requires L >= 3 and s >= 1.
Thresholds thresholds(Int L, Int s, Int max_exact_bits = kDefaultExactBits);

/// Insertion parts used when the impermissible part is small (s+1 <= k <= 2s+1).
struct SmallKConstants {
  Int alpha, beta, gamma, delta;
};
SmallKConstants small_k_constants(Int s);

}  // namespace partineq
