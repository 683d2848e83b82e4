// T10: s+1 <= k <= 2s+1, L >= 3s+3.

#include "internal.hpp"
#include "partineq/thresholds.hpp"

namespace partineq::detail {

namespace {

Int period(Int s) { return 60 * (s + 1); }

}  // namespace

Mapped map_small_k(const InjectionParams& params, const Partition& p, bool build) {
  const Int s = params.s;
  const Int k = params.k;
  const Int f = p.freq(k);
  const Int t = checked_mul(s, s + 1);
  const Int M = period(s);
  Mapped out{make_label(Theorem::T10, {}), {}};
  out.label.selectors.emplace_back("f", to_big(f));
  PartitionBuilder b(p);

  if (f >= 3) {
    const Int j = (f - 3) / (M - 3);
    const Int inserted = f + 3 * j - 2;
    out.label.path = {"1"};
    out.label.selectors.emplace_back("j", to_big(j));
    if (build) {
      const Int n = checked_sub(checked_mul(k, f), checked_mul(s, inserted));
      const SimpleSolution sol =
          fixed_simple({"T10", "r", key_params(params), {f}}, {Equation::Kind::Simple, 2 * s + 1, 0, n});
      b.add(s, inserted).add(k, -f);
      for (Int part = 2 * s + 2; part <= 4 * s + 3; ++part) b.add(part, sol.at(part));
      out.image = b.build();
    }
    return out;
  }

  // Case 2 always moves the f parts k to s+k.
  b.add(k, -f).add(s + k, f);
  const Int Fpp = to_int(threshold_Fpp(s));
  if (auto m0 = least_part_with(p, s + 1, Fpp - 1, 300 * t)) {
    out.label.path = {"2", "a"};
    out.label.selectors.emplace_back("m0", to_big(*m0));
    if (build) out.image = b.add(s, checked_mul(300 * (s + 1), *m0) - f).add(*m0, -300 * t).build();
    return out;
  }
  const auto l = least_part_with(p, Fpp, params.L + s, 1);
  if (!l) not_applicable(params, p, "no part of frequency >= 300s(s+1) below F'' and no part >= F''");
  out.label.selectors.emplace_back("l", to_big(*l));

  const SmallKConstants q = small_k_constants(s);
  const bool fa = p.freq(q.alpha) > 0, fb = p.freq(q.beta) > 0;
  const bool fg = p.freq(q.gamma) > 0, fd = p.freq(q.delta) > 0;
  if (fa && fg) {
    out.label.path = {"2", "b", "i"};
    if (build) out.image = b.add(s, 180 * (s + 1) - f).add(q.alpha, -1).add(q.gamma, -1).build();
    return out;
  }
  if (fb && fd) {
    out.label.path = {"2", "b", "ii"};
    if (build) out.image = b.add(s, 240 * (s + 1) - f).add(q.beta, -1).add(q.delta, -1).build();
    return out;
  }
  struct Option {
    bool holds;
    const char* name;
    const char* family;
    Int u, v, c;
  };
  const Option options[] = {
      {!fa && !fb, "T1", "xy", q.alpha, q.beta, 60},
      {!fa && !fd, "T2", "zw", q.alpha, q.delta, 120},
      {!fg && !fb, "T3", "uv", q.gamma, q.beta, 360},
      {!fg && !fd, "T4", "pq", q.gamma, q.delta, 420},
  };
  for (const Option& o : options) {
    if (!o.holds) continue;
    out.label.path = {"2", "b", "iii", o.name};
    if (build) {
      const PairSolution sol = fixed_pair({"T10", o.family, key_params(params), {*l}},
                                          {Equation::Kind::Pair, o.u, o.v, *l - o.c * t});
      out.image = b.add(s, o.c * (s + 1) - f).add(o.u, sol.x).add(o.v, sol.y).add(*l, -1).build();
    }
    return out;
  }
  throw std::logic_error("T1..T4 exhaust Case 2(b)(iii)");
}

Partition witness_small_k(const InjectionParams& params, Int N) {
  const Int s = params.s;
  const PairSolution sol = solve_pair(2 * s + 2, 2 * s + 3, N - 480 * s * (s + 1), false);
  return PartitionBuilder().add(s, 480 * (s + 1)).add(2 * s + 2, sol.x).add(2 * s + 3, sol.y).build();
}

Signature signature_small_k(const InjectionParams& params, const CaseLabel& label) {
  const Int s = params.s;
  const Int M = period(s);
  const std::string path = label.path_string();
  auto near_multiple = [M](Int c) {
    // {c(s+1) - h : h = 0, 1, 2}
    const Int v = c * (M / 60);
    return std::vector<Int>{v, v - 1, v - 2};
  };
  if (path == "1") {
    Signature sig("n >= 1 with n mod " + std::to_string(M) + " not in {0, -1, -2}", [M](const BigInt& v) {
      if (v < 1) return false;
      const BigInt r = v % M;
      return r != 0 && r != M - 1 && r != M - 2;
    });
    sig.modulus = M;
    sig.residues = {0, M - 1, M - 2};
    sig.excluded = true;
    return sig;
  }
  if (path == "2(a)") {
    const Int lo = s + 1, hi = to_int(threshold_Fpp(s)) - 1, step = 300 * (s + 1);
    Signature sig("300(s+1)m - h, s+1 <= m < F'', h in {0,1,2}", [lo, hi, step](const BigInt& v) {
      const BigInt m = (v + 2) / step;
      const BigInt h = m * step - v;
      return m >= lo && m <= hi && h >= 0 && h <= 2;
    });
    return sig;
  }
  const std::pair<const char*, Int> fixed_cases[] = {
      {"2(b)(i)", 180}, {"2(b)(ii)", 240}, {"2(b)(iii)(T1)", 60},
      {"2(b)(iii)(T2)", 120}, {"2(b)(iii)(T3)", 360}, {"2(b)(iii)(T4)", 420},
  };
  for (const auto& [name, c] : fixed_cases)
    if (path == name) return set_signature(std::to_string(c) + "(s+1) - h, h in {0,1,2}", near_multiple(c));
  throw InvalidArgument("unknown case label " + label.to_string());
}

std::vector<CaseLabel> labels_small_k(const InjectionParams&) {
  const Theorem t = Theorem::T10;
  return {make_label(t, {"1"}),
          make_label(t, {"2", "a"}),
          make_label(t, {"2", "b", "i"}),
          make_label(t, {"2", "b", "ii"}),
          make_label(t, {"2", "b", "iii", "T1"}),
          make_label(t, {"2", "b", "iii", "T2"}),
          make_label(t, {"2", "b", "iii", "T3"}),
          make_label(t, {"2", "b", "iii", "T4"})};
}

}  // namespace partineq::detail
