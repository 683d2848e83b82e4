#include "partineq/qseries.hpp"

#include <string>
#include <utility>

namespace partineq {

namespace {

void require_same_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.trunc() != b.trunc())
    throw InvalidArgument("series truncations differ: " + std::to_string(a.trunc()) + " vs " +
                          std::to_string(b.trunc()));
}

void require_trunc(Int T) {
  if (T < 0) throw InvalidArgument("truncation must be nonnegative");
}

// Indices of nonzero coefficients; the polynomials built here are sparse.
std::vector<std::size_t> support(const std::vector<BigInt>& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) out.push_back(i);
  return out;
}

// p <- p / (1 - q^e), exact on truncated series.
void divide_by_one_minus(std::vector<BigInt>& c, Int e) {
  for (std::size_t n = static_cast<std::size_t>(e); n < c.size(); ++n) c[n] += c[n - static_cast<std::size_t>(e)];
}

}  // namespace

TruncatedSeries::TruncatedSeries(Int T) {
  require_trunc(T);
  coeffs_.assign(static_cast<std::size_t>(T) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(Int T, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  require_trunc(T);
  coeffs_.resize(static_cast<std::size_t>(T) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(Int T) { return monomial(T, 0, 1); }

TruncatedSeries TruncatedSeries::monomial(Int T, Int exponent, const BigInt& coeff) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  TruncatedSeries out(T);
  if (exponent <= T) out.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
  return out;
}

BigInt TruncatedSeries::coeff(Int n) const {
  if (n < 0) return 0;
  if (n > trunc())
    throw InvalidArgument("coefficient " + std::to_string(n) + " beyond truncation " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_trunc(a, b);
  const std::size_t len = a.coeffs_.size();
  TruncatedSeries out(a.trunc());
  const auto& sparse = support(a.coeffs_).size() <= support(b.coeffs_).size() ? a.coeffs_ : b.coeffs_;
  const auto& dense = &sparse == &a.coeffs_ ? b.coeffs_ : a.coeffs_;
  for (std::size_t i : support(sparse))
    for (std::size_t j = 0; i + j < len; ++j)
      if (sgn(dense[j]) != 0) out.coeffs_[i + j] += sparse[i] * dense[j];
  return out;
}

TruncatedSeries TruncatedSeries::shifted(Int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  TruncatedSeries out(trunc());
  for (Int n = trunc(); n >= k; --n) out.coeffs_[n] = coeffs_[n - k];
  return out;
}

TruncatedSeries TruncatedSeries::truncated(Int new_T) const {
  if (new_T > trunc()) throw InvalidArgument("cannot extend a truncated series");
  return TruncatedSeries(new_T, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_T + 1));
}

TruncatedSeries series_inverse(const TruncatedSeries& p) {
  const auto& a = p.coeffs();
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw NotInvertible("constant term " + c0.get_str() + " is not a unit");
  std::vector<std::size_t> terms;
  for (std::size_t i : support(a))
    if (i > 0) terms.push_back(i);
  // b_0 = 1/c_0; b_n = -(1/c_0) * sum_{k>=1} a_k b_{n-k}.
  std::vector<BigInt> b(a.size(), BigInt(0));
  b[0] = c0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t k : terms) {
      if (k > n) break;
      acc += a[k] * b[n - k];
    }
    b[n] = c0 == 1 ? BigInt(-acc) : acc;
  }
  return TruncatedSeries(p.trunc(), std::move(b));
}

TruncatedSeries poly_pochhammer(Int s, Int n, Int T) {
  if (s < 0 || n < 0) throw InvalidArgument("poly_pochhammer needs s, n >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(T) + 1, BigInt(0));
  c[0] = 1;
  for (Int i = 0; i < n; ++i) {
    const Int e = s + i;
    if (e == 0) {
      // Factor (1 - 1) annihilates the product.
      return TruncatedSeries(T);
    }
    // multiply by (1 - q^e), high terms first
    for (Int m = T; m >= e; --m) c[m] -= c[m - e];
  }
  return TruncatedSeries(T, std::move(c));
}

TruncatedSeries h_series(Int L, Int s, Int k, Int T) {
  if (L < 1 || s < 1 || k < 1) throw InvalidArgument("h_series needs positive L, s, k");
  const TruncatedSeries numerator =
      TruncatedSeries::monomial(T, s) - TruncatedSeries::monomial(T, s + k);
  const TruncatedSeries first = numerator * series_inverse(poly_pochhammer(s, L + 1, T));
  const TruncatedSeries second = series_inverse(poly_pochhammer(s + 1, L, T)) - TruncatedSeries::one(T);
  return first - second;
}

TruncatedSeries g2_series(Int L, Int T) {
  if (L < 3) throw InvalidArgument("g2_series needs L >= 3");
  const TruncatedSeries denom = TruncatedSeries::one(T) - TruncatedSeries::monomial(T, L);
  return h_series(L, 2, L, T) * series_inverse(denom);
}

TruncatedSeries lemma13_difference(Int L, Int s, Int k, Int i, Int T) {
  if (L < 1 || s < 1 || k < 1) throw InvalidArgument("lemma13_difference needs positive L, s, k");
  if (i < s || i > L + s)
    throw InvalidArgument("lemma13_difference needs s <= i <= L+s, got i=" + std::to_string(i));
  std::vector<BigInt> c = TruncatedSeries::monomial(T, s + k).coeffs();
  for (Int j = s; j <= L + s; ++j)
    if (j != i) divide_by_one_minus(c, j);
  return TruncatedSeries(T, std::move(c));
}

TruncatedSeries lemma14_series(Int L, Int s, Int T) {
  if (L < 1 || s < 1) throw InvalidArgument("lemma14_series needs positive L, s");
  const TruncatedSeries numerator =
      TruncatedSeries::monomial(T, s) - TruncatedSeries::monomial(T, L + s - 1);
  return numerator * series_inverse(poly_pochhammer(s, L + 1, T));
}

bool induction_step_identity(Int L, Int s, Int i, Int T) {
  if (i < L - 1) throw InvalidArgument("induction_step_identity needs i >= L-1");
  const TruncatedSeries lhs = h_series(L, s, i + 1, T) - h_series(L, s, i - L + 2, T);
  const TruncatedSeries rhs = lemma14_series(L, s, T).shifted(i - L + 2);
  return lhs == rhs;
}

}  // namespace partineq
