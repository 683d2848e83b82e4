// T16-T19: the s = 2, k = L maps into C*(L,2). All four work on a dense
// frequency array g[0..L+2]; the sparse interface converts at the edges.

#include "gl2_core.hpp"
#include "internal.hpp"

namespace partineq {

namespace {

constexpr Int kCase1Table = 64;

bool is_gl2(Theorem t) {
  return t == Theorem::T16 || t == Theorem::T17 || t == Theorem::T18 || t == Theorem::T19;
}

}  // namespace

CaseLabel gl2_case_label(Gl2Case c) {
  using detail::make_label;
  switch (c) {
    case Gl2Case::NotApplicable: break;
    case Gl2Case::T16_1: return make_label(Theorem::T16, {"1"});
    case Gl2Case::T16_2A: return make_label(Theorem::T16, {"2", "A"});
    case Gl2Case::T16_2Atop: return make_label(Theorem::T16, {"2", "A", "top"});
    case Gl2Case::T16_2Bi: return make_label(Theorem::T16, {"2", "B", "i"});
    case Gl2Case::T16_2Biia: return make_label(Theorem::T16, {"2", "B", "ii", "a"});
    case Gl2Case::T16_2Biib_alpha: return make_label(Theorem::T16, {"2", "B", "ii", "b", "alpha"});
    case Gl2Case::T16_2Biib_beta: return make_label(Theorem::T16, {"2", "B", "ii", "b", "beta"});
    case Gl2Case::T17_1: return make_label(Theorem::T17, {"1"});
    case Gl2Case::T17_2: return make_label(Theorem::T17, {"2"});
    case Gl2Case::T17_3i: return make_label(Theorem::T17, {"3", "i"});
    case Gl2Case::T17_3ii: return make_label(Theorem::T17, {"3", "ii"});
    case Gl2Case::T18_1: return make_label(Theorem::T18, {"1"});
    case Gl2Case::T18_2: return make_label(Theorem::T18, {"2"});
    case Gl2Case::T18_3i: return make_label(Theorem::T18, {"3", "i"});
    case Gl2Case::T18_3ii: return make_label(Theorem::T18, {"3", "ii"});
    case Gl2Case::T18_4i: return make_label(Theorem::T18, {"4", "i"});
    case Gl2Case::T18_4ii: return make_label(Theorem::T18, {"4", "ii"});
    case Gl2Case::T19_1: return make_label(Theorem::T19, {"1"});
    case Gl2Case::T19_2i: return make_label(Theorem::T19, {"2", "i"});
    case Gl2Case::T19_2ii: return make_label(Theorem::T19, {"2", "ii"});
    case Gl2Case::T19_2iii: return make_label(Theorem::T19, {"2", "iii"});
  }
  throw InvalidArgument("NotApplicable has no case label");
}

Gl2Kernel::Gl2Kernel(const InjectionParams& params) : params_(params) {
  if (!is_gl2(params.theorem) || params.s != 2 || params.k != params.L)
    throw InvalidArgument("Gl2Kernel requires one of T16-T19 with s = 2, k = L");
  auto core = std::make_shared<detail::Gl2Core>();
  core->L = params.L;
  core->literal = params.literal;
  if (params.theorem == Theorem::T16) {
    // L f = 8f + 3x + 4y + 5z, fixed once per f.
    core->extend = [params](Int f) -> detail::Gl2Core::Triple {
      const SimpleSolution sol =
          detail::fixed_simple({"T16", "xyz", detail::key_params(params), {f}},
                               {Equation::Kind::Simple, 2, 0, checked_mul(params.L - 8, f)});
      return {sol.at(3), sol.at(4), sol.at(5)};
    };
    core->case1.push_back({0, 0, 0});
    for (Int f = 1; f < kCase1Table; ++f) core->case1.push_back(core->extend(f));
  }
  core_ = std::move(core);
}

Gl2Case Gl2Kernel::apply(std::span<Int> g) const {
  switch (params_.theorem) {
    case Theorem::T16: return core_->apply<Theorem::T16>(g.data());
    case Theorem::T17: return core_->apply<Theorem::T17>(g.data());
    case Theorem::T18: return core_->apply<Theorem::T18>(g.data());
    case Theorem::T19: return core_->apply<Theorem::T19>(g.data());
    default: return Gl2Case::NotApplicable;
  }
}

bool Gl2Kernel::decode(std::span<Int> g) const {
  switch (params_.theorem) {
    case Theorem::T16: return core_->decode<Theorem::T16>(g.data());
    case Theorem::T17: return core_->decode<Theorem::T17>(g.data());
    case Theorem::T18: return core_->decode<Theorem::T18>(g.data());
    case Theorem::T19: return core_->decode<Theorem::T19>(g.data());
    default: return false;
  }
}

namespace detail {

Mapped map_gl2(const InjectionParams& params, const Partition& p, bool build) {
  const Gl2Kernel kernel(params);
  const Int L = params.L;
  std::vector<Int> g(kernel.width(), 0);
  for (const auto& e : p.entries()) g[static_cast<std::size_t>(e.part)] = e.freq;

  // Selectors are read before the kernel rewrites g.
  std::vector<std::pair<std::string, BigInt>> selectors;
  switch (params.theorem) {
    case Theorem::T16:
      if (g[L] > 0) selectors.emplace_back("f", to_big(g[L]));
      else if (g[3] == 0 && g[4] == 0) selectors.emplace_back("s(pi)", to_big(p.smallest_part()));
      else if (g[4] == 0 && g[3] == 1)
        if (auto m0 = least_part_with(p, 5, L + 2, 1)) selectors.emplace_back("m0", to_big(*m0));
      break;
    case Theorem::T17:
      if (g[L] > 0) selectors.emplace_back("f", to_big(g[L]));
      else if (auto i0 = least_part_with(p, 3, L + 2, 2)) selectors.emplace_back("i0", to_big(*i0));
      break;
    case Theorem::T18: selectors.emplace_back("f3", to_big(g[3])); break;
    case Theorem::T19: selectors.emplace_back("f4", to_big(g[4])); break;
    default: break;
  }

  const Gl2Case c = kernel.apply(g);
  if (c == Gl2Case::NotApplicable) not_applicable(params, p, "below the weight regime of the construction");
  Mapped out{gl2_case_label(c), {}};
  out.label.selectors = std::move(selectors);
  if (build) {
    PartitionBuilder b;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) b.add(static_cast<Int>(i), g[i]);
    out.image = b.build();
  }
  return out;
}

Partition witness_gl2(const InjectionParams& params, Int N) {
  const Int L = params.L;
  switch (params.theorem) {
    case Theorem::T16: {
      if (N < 14) throw NotApplicable("T16 strictness witness is constructed for N >= 14");
      if (N == 14) return Partition::from_entries({{2, 1}, {3, 4}});
      const SimpleSolution sol = simple_solve(3, N - 11);
      PartitionBuilder b;
      b.add(2, 1).add(3, 3);
      for (Int part = 4; part <= 7; ++part) b.add(part, sol.at(part));
      return b.build();
    }
    case Theorem::T17: {
      const PairSolution sol = solve_pair(3, 4, N - 2 * (L + 3), false);
      return PartitionBuilder().add(2, L + 3).add(3, sol.x).add(4, sol.y).build();
    }
    case Theorem::T18: {
      const PairSolution sol = solve_pair(4, 5, N - 14, false);
      return PartitionBuilder().add(2, 7).add(4, sol.x).add(5, sol.y).build();
    }
    case Theorem::T19: {
      const PairSolution sol = solve_pair(3, 5, N - 2, false);
      return PartitionBuilder().add(2, 1).add(3, sol.x).add(5, sol.y).build();
    }
    default:
      break;
  }
  throw std::logic_error("witness_gl2 called for a non s = 2 theorem");
}

namespace {

// Second and third smallest distinct parts of an image and the frequency of
// the second; 0 when absent.
struct NextParts {
  Int second = 0, second_freq = 0, third = 0;
};

NextParts next_parts(const Partition& image) {
  NextParts n;
  const auto e = image.entries();
  if (e.size() > 1) n.second = e[1].part, n.second_freq = e[1].freq;
  if (e.size() > 2) n.third = e[2].part;
  return n;
}

Signature multiples_of(Int m, Int residue, std::string description) {
  Signature sig(std::move(description),
                [m, residue](const BigInt& v) { return v >= 1 && BigInt(v % m) == residue; });
  sig.modulus = m;
  sig.residues = {residue};
  return sig;
}

}  // namespace

Signature signature_gl2(const InjectionParams& params, const CaseLabel& label) {
  const Int L = params.L;
  const std::string path = label.path_string();
  const auto one = [](const BigInt& v) { return v == 1; };
  switch (params.theorem) {
    case Theorem::T16:
      if (path == "1") return multiples_of(4, 0, "multiples of 4");
      if (path == "2(A)")
        return Signature("1; next parts d, e with f_d = 1 and e >= d+2 or absent", one, [](const Partition& im) {
          const NextParts n = next_parts(im);
          return n.second_freq == 1 && (n.third == 0 || n.third >= n.second + 2);
        });
      if (path == "2(A)(top)") return set_signature("5", {5});
      if (path == "2(B)(i)") return set_signature("2", {2});
      if (path == "2(B)(ii)(a)") return set_signature("3", {3});
      if (path == "2(B)(ii)(b)(alpha)")
        return Signature("1; second smallest part has frequency 2", one,
                         [](const Partition& im) { return next_parts(im).second_freq == 2; });
      if (path == "2(B)(ii)(b)(beta)")
        return Signature("1; next parts d, d+1 with f_d = 1", one, [](const Partition& im) {
          const NextParts n = next_parts(im);
          return n.second_freq == 1 && n.third == n.second + 1;
        });
      break;
    case Theorem::T17:
      if (path == "1") return multiples_of(L, 0, "multiples of " + std::to_string(L));
      if (path == "2") return multiples_of(L, 1, "1 mod " + std::to_string(L));
      if (path == "3(i)") {
        std::vector<Int> v;
        for (Int i = 3; i <= L - 1; ++i) v.push_back(i);
        v.push_back(L + 2);
        return set_signature("3..L-1 and L+2", std::move(v));
      }
      if (path == "3(ii)") return set_signature("2", {2});
      break;
    case Theorem::T18:
      if (path == "1") return multiples_of(3, 0, "multiples of 3");
      if (path == "2") return multiples_of(3, 2, "2 mod 3");
      if (path == "3(i)") return set_signature("1", {1});
      if (path == "3(ii)") return set_signature("4", {4});
      if (path == "4(i)") return set_signature("16", {16});
      if (path == "4(ii)") return set_signature("10", {10});
      break;
    case Theorem::T19:
      if (path == "1") return multiples_of(2, 0, "even");
      if (path == "2(i)") return set_signature("3", {3});
      if (path == "2(ii)") return set_signature("5", {5});
      if (path == "2(iii)") return set_signature("9", {9});
      break;
    default:
      break;
  }
  throw InvalidArgument("unknown case label " + label.to_string());
}

std::vector<CaseLabel> labels_gl2(const InjectionParams& params) {
  std::vector<CaseLabel> out;
  for (int c = static_cast<int>(Gl2Case::T16_1); c <= static_cast<int>(Gl2Case::T19_2iii); ++c) {
    CaseLabel l = gl2_case_label(static_cast<Gl2Case>(c));
    if (l.theorem != params.theorem) continue;
    if (params.literal && static_cast<Gl2Case>(c) == Gl2Case::T16_2Atop) continue;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace detail

}  // namespace partineq
