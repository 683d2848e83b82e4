#include "partineq/thresholds.hpp"

#include <cmath>
#include <sstream>

namespace partineq {

namespace {

void require_s(Int s) {
  if (s < 1) throw InvalidArgument("s must be positive");
}

// (s+1) + (s+2) + ... + (top-1)
BigInt sum_range(Int s, const BigInt& top) {
  const BigInt lo = to_big(s + 1);
  const BigInt hi = top - 1;
  if (hi < lo) return 0;
  return (lo + hi) * (hi - lo + 1) / 2;
}

double log10_big(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

}  // namespace

std::string HugeValue::to_string() const {
  if (exact) return exact->get_str();
  std::ostringstream os;
  os.precision(12);
  os << "~10^" << log10 << " (" << multiplier.get_str() << "*(" << base.get_str() << "^" << exponent.get_str()
     << " + " << addend.get_str() << "))";
  return os.str();
}

BigInt threshold_F(Int s) {
  require_s(s);
  const BigInt S = to_big(s);
  return (10 * S - 2) * (15 * S - 3) + 8 * S;
}

BigInt threshold_kappa(Int s) { return (12 * to_big(s) - 1) * sum_range(s, threshold_F(s)) + 1; }

BigInt threshold_Fp(Int s) {
  require_s(s);
  const BigInt S = to_big(s);
  return (21 * S - 2) * (35 * S - 3) + 8 * S;
}

BigInt threshold_kappap(Int s) { return (12 * to_big(s) - 1) * sum_range(s, threshold_Fp(s)) + 1; }

BigInt threshold_Fpp(Int s) {
  require_s(s);
  const BigInt S = to_big(s);
  const BigInt t = S * (S + 1);
  return (120 * t - 2) * (180 * t - 3) + 420 * t;
}

BigInt threshold_kappapp(Int s) {
  const BigInt S = to_big(s);
  return (300 * S * (S + 1) - 1) * sum_range(s, threshold_Fpp(s)) + 1;
}

BigInt product_P(Int L, Int s) {
  if (L < 1) throw InvalidArgument("L must be positive");
  require_s(s);
  BigInt P = 1;
  for (Int i = 1; i <= L; ++i) P *= to_big(s + i);
  return P;
}

HugeValue gamma_value(Int L, Int s, Int max_exact_bits) {
  HugeValue g;
  g.base = product_P(L, s);
  const BigInt P2m1L = (g.base * g.base - 1) * to_big(L);
  g.multiplier = to_big(L) * to_big(s) + to_big(L) * to_big(L + 1) / 2;
  g.exponent = P2m1L + 2;
  g.addend = (P2m1L - 2) * g.base;
  const double log10_base = log10_big(g.base);
  const double log10_power = log10_big(g.exponent) > 300 ? INFINITY : g.exponent.get_d() * log10_base;
  g.log10 = log10_big(g.multiplier) + log10_power;
  const double bits = log10_power / std::log10(2.0);
  if (bits <= static_cast<double>(max_exact_bits) && g.exponent.fits_ulong_p()) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), g.base.get_mpz_t(), g.exponent.get_ui());
    g.exact = g.multiplier * (power + g.addend);
    g.log10 = log10_big(*g.exact);
  }
  return g;
}

HugeValue Gamma_value(Int s, Int max_exact_bits) { return gamma_value(3 * s + 2, s, max_exact_bits); }

Int n_L(Int L) {
  if (L < 1) throw InvalidArgument("L must be positive");
  return L * (L + 3) / 2 + 2;
}

Thresholds thresholds(Int L, Int s, Int max_exact_bits) {
  if (L < 3) throw InvalidArgument("thresholds need L >= 3");
  require_s(s);
  Thresholds t;
  t.L = L;
  t.s = s;
  t.F = threshold_F(s);
  t.kappa = threshold_kappa(s);
  t.Fp = threshold_Fp(s);
  t.kappap = threshold_kappap(s);
  t.Fpp = threshold_Fpp(s);
  t.kappapp = threshold_kappapp(s);
  t.P = product_P(L, s);
  t.gamma = gamma_value(L, s, max_exact_bits);
  t.Gamma = Gamma_value(s, max_exact_bits);
  t.N_L = n_L(L);
  return t;
}

SmallKConstants small_k_constants(Int s) {
  require_s(s);
  const Int t = checked_mul(s, s + 1);
  return {60 * t + 1, 60 * t + 2, 120 * t - 1, 180 * t - 2};
}

}  // namespace partineq
