// T8 (k = L+s-1) and T9 (2s+2 <= k <= L+s) share one construction; T9 only
// changes the insertion palette when k collides with it.

#include "internal.hpp"
#include "partineq/thresholds.hpp"

namespace partineq::detail {

namespace {

struct Palette {
  Int a, b, c, d;  // pairs (a,b), (a,d), (c,b), (c,d) are coprime
  Int F;
};

Palette palette(const InjectionParams& params) {
  const Int s = params.s;
  const Int k = params.k;
  Palette def{5 * s + 1, 5 * s + 2, 10 * s - 1, 15 * s - 2, to_int(threshold_F(s))};
  if (params.theorem == Theorem::T8) return def;
  if (s == 1 && k == 9) return {7, 13, 21, 29, to_int(threshold_Fp(s))};
  if (k == def.a || k == def.b || k == def.c || k == def.d)
    return {7 * s + 1, 7 * s + 2, 21 * s - 1, 35 * s - 2, to_int(threshold_Fp(s))};
  return def;
}

std::string tname(const InjectionParams& p) { return std::string(theorem_name(p.theorem)); }

}  // namespace

Mapped map_large(const InjectionParams& params, const Partition& p, bool build) {
  const Int s = params.s;
  const Int k = params.k;
  const Int f = p.freq(k);
  const Palette pal = palette(params);
  Mapped out{make_label(params.theorem, {}), {}};
  PartitionBuilder b(p);

  if (f == 0) {
    if (auto m0 = least_part_with(p, s + 1, pal.F - 1, 12 * s)) {
      out.label.path = {"1", "a"};
      out.label.selectors.emplace_back("m0", to_big(*m0));
      if (build) out.image = b.add(s, checked_mul(12, *m0)).add(*m0, -12 * s).build();
      return out;
    }
    const auto l = least_part_with(p, pal.F, params.L + s, 1);
    if (!l) not_applicable(params, p, "no part of frequency >= 12s below F and no part >= F");
    out.label.selectors.emplace_back("l", to_big(*l));
    const bool fa = p.freq(pal.a) > 0, fb = p.freq(pal.b) > 0;
    const bool fc = p.freq(pal.c) > 0, fd = p.freq(pal.d) > 0;
    if (fa && fc) {
      out.label.path = {"1", "b", "i"};
      if (build) out.image = b.add(s, (pal.a + pal.c) / s).add(pal.a, -1).add(pal.c, -1).build();
      return out;
    }
    if (fb && fd) {
      out.label.path = {"1", "b", "ii"};
      if (build) out.image = b.add(s, (pal.b + pal.d) / s).add(pal.b, -1).add(pal.d, -1).build();
      return out;
    }
    struct Option {
      bool holds;
      const char* name;
      const char* family;
      Int u, v, shift;
    };
    const Option options[] = {
        {!fa && !fb, "T1", "xy", pal.a, pal.b, 2},
        {!fa && !fd, "T2", "zw", pal.a, pal.d, 4},
        {!fc && !fb, "T3", "uv", pal.c, pal.b, 6},
        {!fc && !fd, "T4", "pq", pal.c, pal.d, 8},
    };
    for (const Option& o : options) {
      if (!o.holds) continue;
      out.label.path = {"1", "b", "iii", o.name};
      if (build) {
        const PairSolution sol = fixed_pair({tname(params), o.family, key_params(params), {*l}},
                                            {Equation::Kind::Pair, o.u, o.v, *l - o.shift * s});
        out.image = b.add(s, o.shift).add(o.u, sol.x).add(o.v, sol.y).add(*l, -1).build();
      }
      return out;
    }
    throw std::logic_error("T1..T4 exhaust Case 1(b)(iii)");
  }

  out.label.selectors.emplace_back("f", to_big(f));
  const bool eight = f == 8;
  out.label.path = {"2", eight ? "b" : "a"};
  if (build) {
    const Int inserted = eight ? 14 : 2 * f - 1;
    const Int n = checked_sub(checked_mul(k, f), checked_mul(s, inserted));
    const SimpleSolution sol = fixed_simple({tname(params), eight ? "t" : "r", key_params(params), {f}},
                                            {Equation::Kind::Simple, s, 0, n});
    b.add(s, inserted).add(k, -f);
    for (Int part = s + 1; part <= 2 * s + 1; ++part) b.add(part, sol.at(part));
    out.image = b.build();
  }
  return out;
}

Partition witness_large(const InjectionParams& params, Int N) {
  const Int s = params.s;
  const PairSolution sol = solve_pair(s + 1, s + 2, N - 10 * s, false);
  return PartitionBuilder().add(s, 10).add(s + 1, sol.x).add(s + 2, sol.y).build();
}

Signature signature_large(const InjectionParams& params, const CaseLabel& label) {
  const Int s = params.s;
  const Palette pal = palette(params);
  const std::string path = label.path_string();
  if (path == "1(a)") {
    const Int lo = 12 * (s + 1), hi = 12 * (pal.F - 1);
    Signature sig("multiples of 12 in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                  [lo, hi](const BigInt& v) { return v >= lo && v <= hi && v % 12 == 0; });
    sig.modulus = 12;
    sig.residues = {0};
    return sig;
  }
  if (path == "1(b)(i)") return set_signature(std::to_string((pal.a + pal.c) / s), {(pal.a + pal.c) / s});
  if (path == "1(b)(ii)") return set_signature(std::to_string((pal.b + pal.d) / s), {(pal.b + pal.d) / s});
  if (path == "1(b)(iii)(T1)") return set_signature("2", {2});
  if (path == "1(b)(iii)(T2)") return set_signature("4", {4});
  if (path == "1(b)(iii)(T3)") return set_signature("6", {6});
  if (path == "1(b)(iii)(T4)") return set_signature("8", {8});
  if (path == "2(a)") {
    Signature sig("odd numbers other than 15", [](const BigInt& v) { return v >= 1 && v % 2 != 0 && v != 15; });
    sig.modulus = 2;
    sig.residues = {1};
    return sig;
  }
  if (path == "2(b)") return set_signature("14", {14});
  throw InvalidArgument("unknown case label " + label.to_string());
}

std::vector<CaseLabel> labels_large(const InjectionParams& params) {
  const Theorem t = params.theorem;
  return {make_label(t, {"1", "a"}),
          make_label(t, {"1", "b", "i"}),
          make_label(t, {"1", "b", "ii"}),
          make_label(t, {"1", "b", "iii", "T1"}),
          make_label(t, {"1", "b", "iii", "T2"}),
          make_label(t, {"1", "b", "iii", "T3"}),
          make_label(t, {"1", "b", "iii", "T4"}),
          make_label(t, {"2", "a"}),
          make_label(t, {"2", "b"})};
}

}  // namespace partineq::detail
