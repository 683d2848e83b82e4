#pragma once

#include <span>
#include <vector>

#include "partineq/types.hpp"

namespace partineq {

/// Formal power series c_0 + c_1 q + ... + c_T q^T, higher terms discarded.
/// Binary operations require both operands to share the truncation order.
class TruncatedSeries {
 public:
  /// Zero series truncated at T.
  explicit TruncatedSeries(Int T);
  TruncatedSeries(Int T, std::vector<BigInt> coeffs);

  static TruncatedSeries one(Int T);
  /// coeff * q^exponent (zero if exponent > T).
  static TruncatedSeries monomial(Int T, Int exponent, const BigInt& coeff = 1);

  Int trunc() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
  /// c_n for 0 <= n <= T; zero for n < 0. Throws InvalidArgument for n > T.
  BigInt coeff(Int n) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::span<const BigInt> view() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplies by q^k (k >= 0), dropping terms beyond T.
  TruncatedSeries shifted(Int k) const;
  /// Keeps only terms up to new_T <= T.
  TruncatedSeries truncated(Int new_T) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Inverse up to truncation. Throws NotInvertible unless c_0 is 1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& p);

/// (q^s; q)_n = (1-q^s)(1-q^{s+1})...(1-q^{s+n-1}); n = 0 gives 1.
TruncatedSeries poly_pochhammer(Int s, Int n, Int T);

/// H_{L,s,k}(q) = q^s (1-q^k) / (q^s;q)_{L+1} - (1/(q^{s+1};q)_L - 1).
TruncatedSeries h_series(Int L, Int s, Int k, Int T);

/// G_{L,2}(q) = H_{L,2,L}(q) / (1 - q^L), L >= 3.
TruncatedSeries g2_series(Int L, Int T);

/// H_{L,s,k+i} - H_{L,s,k} via the cancelled closed form
/// q^{s+k} / prod_{j in [s, L+s], j != i} (1 - q^j); s <= i <= L+s.
TruncatedSeries lemma13_difference(Int L, Int s, Int k, Int i, Int T);

/// (q^s - q^{L+s-1}) / (q^s;q)_{L+1}.
TruncatedSeries lemma14_series(Int L, Int s, Int T);

/// Checks H_{L,s,i+1} - H_{L,s,i-L+2} == q^{i-L+2}(q^s - q^{L+s-1})/(q^s;q)_{L+1}
/// coefficientwise up to T. Requires i >= L-1.
bool induction_step_identity(Int L, Int s, Int i, Int T);

}  // namespace partineq
