// T12: L >= 3, s+1 <= k <= L+s.

#include "internal.hpp"
#include "partineq/thresholds.hpp"

namespace partineq::detail {

namespace {

struct Setup {
  Int s, k, L;
  Int alpha, beta;
  bool shared;  // k = s+2 with s odd: gcd(s+1, s+3) = 2
  BigInt P;
};

Setup setup(const InjectionParams& params) {
  Setup u{params.s, params.k, params.L, 1, 2, false, product_P(params.L, params.s)};
  if (u.k == u.s + 1) {
    u.alpha = 2;
    u.beta = 3;
  } else if (u.k == u.s + 2) {
    u.alpha = 1;
    u.beta = 3;
    u.shared = u.s % 2 != 0;
  }
  return u;
}

Int eta(Int u) { return u % 2 != 0 ? 1 : 0; }

// Largest h with P^h <= j (P >= 2, j >= 1).
Int floor_log(const BigInt& P, const BigInt& j) {
  Int h = 0;
  BigInt pw = P;
  while (pw <= j) {
    pw *= P;
    ++h;
  }
  return h;
}

// m_{f,p} = P^{(f-1)L+p+2} + ((f-1)L+p-2) P when it fits in 62 bits.
std::optional<Int> m_value(const Setup& u, Int f, Int p) {
  const Int h = (f - 1) * u.L + p + 2;
  const Int limit = Int{1} << 62;
  BigInt pw = 1;
  for (Int i = 0; i < h; ++i) {
    pw *= u.P;
    if (pw > limit) return std::nullopt;
  }
  const BigInt m = pw + (h - 4) * u.P;
  if (m > limit) return std::nullopt;
  return to_int(m);
}

Equation::Kind pair_kind(const Setup& u) { return u.shared ? Equation::Kind::SharedFactor : Equation::Kind::Pair; }

// Membership in {P^h + (h-4)P + e : h >= 3, e in {0, 1}}.
bool in_Ub(const BigInt& P, const BigInt& v) {
  BigInt pw = P * P * P;
  for (Int h = 3; pw <= v + P; ++h, pw *= P) {
    const BigInt base = pw + (h - 4) * P;
    if (v == base || v == base + 1) return true;
  }
  return false;
}

// Membership in {j + (h(j)-3)P - 2 : j >= P^2}.
bool in_Ua(const BigInt& P, const BigInt& v) {
  // j = v - (h-3)P + 2 for the h with P^h <= j < P^{h+1}; h >= 2 and the
  // candidate h cannot exceed floor_log(v + P + 2) + 1.
  const Int hmax = floor_log(P, v + P + 2) + 1;
  for (Int h = 2; h <= hmax; ++h) {
    const BigInt j = v - (h - 3) * P + 2;
    if (j < P * P) continue;
    if (floor_log(P, j) == h) return true;
  }
  return false;
}

}  // namespace

Mapped map_general(const InjectionParams& params, const Partition& p, bool build) {
  const Setup u = setup(params);
  const Int s = u.s;
  const Int k = u.k;
  const Int f = p.freq(k);
  Mapped out{make_label(Theorem::T12, {}), {}};
  PartitionBuilder b(p);

  if (f == 0) {
    const auto m0 = least_part_with(p, s + 1, u.L + s, s);
    if (!m0) not_applicable(params, p, "f = 0 and no part has frequency >= s");
    out.label.path = {"1"};
    out.label.selectors.emplace_back("m0", to_big(*m0));
    if (build) out.image = b.add(s, *m0).add(*m0, -s).build();
    return out;
  }

  out.label.selectors.emplace_back("f", to_big(f));
  const BigInt F = to_big(f);
  if (F >= u.P * u.P) {
    const Int h = floor_log(u.P, F);
    out.label.path = {"2", "a"};
    out.label.selectors.emplace_back("h", to_big(h));
    if (build) {
      const Int inserted = to_int(F + (h - 3) * u.P - 2);
      const Int n = checked_sub(checked_mul(k, f), checked_mul(s, inserted));
      const PairSolution sol =
          fixed_pair({"T12", "xy", key_params(params), {f}}, {pair_kind(u), s + u.alpha, s + u.beta, n});
      out.image = b.add(s, inserted).add(s + u.alpha, sol.x).add(s + u.beta, sol.y).add(k, -f).build();
    }
    return out;
  }

  std::optional<Int> chosen;
  Int m = 0;
  for (Int q = 1; q <= u.L && !chosen; ++q) {
    const auto mq = m_value(u, f, q);
    if (mq && p.freq(s + q) >= *mq) {
      chosen = q;
      m = *mq;
    }
  }
  if (!chosen) not_applicable(params, p, "0 < f < P^2 and no part s+p reaches m_{f,p}");
  const Int pp = *chosen;
  out.label.path = {"2", "b"};
  if (pp == u.alpha) out.label.path.push_back("alpha");
  if (pp == u.beta) out.label.path.push_back("beta");
  out.label.selectors.emplace_back("p", to_big(pp));
  if (build) {
    const Int correction = (u.shared && eta(f)) ? 1 : 0;  // delta_{k,s+2} eta_s eta_f
    const Int j = checked_mul(s, m) / (s + pp);
    if (j * (s + pp) != s * m) throw std::logic_error("s+p does not divide s*m_{f,p}");
    const Int n = checked_add(checked_mul(2 * s, s + pp), checked_mul(f, k)) - s * correction;
    const PairSolution sol =
        fixed_pair({"T12", "zw", key_params(params), {f, pp}}, {pair_kind(u), s + u.alpha, s + u.beta, n});
    out.image = b.add(s, m + correction)
                    .add(s + pp, -(j + 2 * s))
                    .add(s + u.alpha, sol.x)
                    .add(s + u.beta, sol.y)
                    .add(k, -f)
                    .build();
  }
  return out;
}

Partition witness_general(const InjectionParams& params, Int N) {
  const Setup u = setup(params);
  const Int s = u.s;
  const Int correction = (u.shared && eta(N - u.L)) ? 1 : 0;
  const Int count = u.L + s + 1 + correction;
  const PairSolution sol = solve_pair(s + u.alpha, s + u.beta, N - s * count, u.shared);
  return PartitionBuilder().add(s, count).add(s + u.alpha, sol.x).add(s + u.beta, sol.y).build();
}

Signature signature_general(const InjectionParams& params, const CaseLabel& label) {
  const Setup u = setup(params);
  const std::string path = label.path_string();
  if (path == "1") {
    const Int lo = u.s + 1, hi = u.L + u.s;
    return Signature("U1 = [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                     [lo, hi](const BigInt& v) { return v >= lo && v <= hi; });
  }
  if (path == "2(a)")
    return Signature("Ua = {j + (h(j)-3)P - 2 : j >= P^2}", [P = u.P](const BigInt& v) { return in_Ua(P, v); });
  if (path == "2(b)" || path == "2(b)(alpha)" || path == "2(b)(beta)")
    return Signature("Ub = {P^h + (h-4)P (+1) : h >= 3}", [P = u.P](const BigInt& v) { return in_Ub(P, v); });
  throw InvalidArgument("unknown case label " + label.to_string());
}

std::vector<CaseLabel> labels_general(const InjectionParams&) {
  const Theorem t = Theorem::T12;
  return {make_label(t, {"1"}), make_label(t, {"2", "a"}), make_label(t, {"2", "b"}),
          make_label(t, {"2", "b", "alpha"}), make_label(t, {"2", "b", "beta"})};
}

}  // namespace partineq::detail
