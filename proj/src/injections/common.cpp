#include <algorithm>
#include <array>
#include <sstream>

#include "internal.hpp"

namespace partineq {

namespace {

constexpr std::array kTheorems = {Theorem::T8,  Theorem::T9,  Theorem::T10, Theorem::T12,    Theorem::T16,
                                  Theorem::T17, Theorem::T18, Theorem::T19, Theorem::L14easy};

std::string describe(const InjectionParams& p) {
  std::ostringstream os;
  os << theorem_name(p.theorem) << " (L=" << p.L << ", s=" << p.s << ", k=" << p.k << ")";
  return os.str();
}

void require(bool ok, const InjectionParams& p, const std::string& what) {
  if (!ok) throw InvalidArgument(describe(p) + " requires " + what);
}

bool is_gl2(Theorem t) {
  return t == Theorem::T16 || t == Theorem::T17 || t == Theorem::T18 || t == Theorem::T19;
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T8: return "T8";
    case Theorem::T9: return "T9";
    case Theorem::T10: return "T10";
    case Theorem::T12: return "T12";
    case Theorem::T16: return "T16";
    case Theorem::T17: return "T17";
    case Theorem::T18: return "T18";
    case Theorem::T19: return "T19";
    case Theorem::L14easy: return "L14easy";
  }
  return "?";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : kTheorems)
    if (theorem_name(t) == name) return t;
  throw InvalidArgument("unknown theorem '" + std::string(name) + "'");
}

std::vector<Theorem> all_theorems() { return {kTheorems.begin(), kTheorems.end()}; }

InjectionParams make_params(Theorem theorem, Int L, Int s, Int k, bool literal) {
  InjectionParams p{theorem, L, s, k, literal};
  if (is_gl2(theorem)) {
    if (p.s == 0) p.s = 2;
    if (p.k == 0) p.k = L;
    require(p.s == 2 && p.k == L, p, "s = 2 and k = L");
  }
  if (theorem == Theorem::T8 && p.k == 0) p.k = L + p.s - 1;
  require(p.L >= 1 && p.s >= 1, p, "positive L and s");
  switch (theorem) {
    case Theorem::T8:
      require(p.L >= p.s + 3, p, "L >= s+3");
      require(p.k == p.L + p.s - 1, p, "k = L+s-1");
      break;
    case Theorem::T9:
      require(p.L >= p.s + 2, p, "L >= s+2");
      require(p.k >= 2 * p.s + 2 && p.k <= p.L + p.s, p, "2s+2 <= k <= L+s");
      break;
    case Theorem::T10:
      require(p.L >= 3 * p.s + 3, p, "L >= 3s+3");
      require(p.k >= p.s + 1 && p.k <= 2 * p.s + 1, p, "s+1 <= k <= 2s+1");
      break;
    case Theorem::T12:
      require(p.L >= 3, p, "L >= 3");
      require(p.k >= p.s + 1 && p.k <= p.L + p.s, p, "s+1 <= k <= L+s");
      break;
    case Theorem::T16:
      require(p.L >= 11, p, "L >= 11");
      break;
    case Theorem::T17:
      require(p.L >= 5 && p.L <= 10, p, "5 <= L <= 10");
      break;
    case Theorem::T18:
      require(p.L == 3, p, "L = 3");
      break;
    case Theorem::T19:
      require(p.L == 4, p, "L = 4");
      break;
    case Theorem::L14easy:
      require(p.L >= p.s + 1, p, "L >= s+1");
      p.k = 0;
      break;
  }
  return p;
}

SetSpec domain_family(const InjectionParams& params) {
  if (params.theorem == Theorem::L14easy) return SetSpec::B(params.L, params.s);
  return SetSpec::D(params.L, params.s);
}

SetSpec codomain_family(const InjectionParams& params) {
  if (params.theorem == Theorem::L14easy) return SetSpec::A(params.L, params.s);
  return SetSpec::I(params.L, params.s, params.k);
}

std::string CaseLabel::path_string() const {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += i == 0 ? path[i] : "(" + path[i] + ")";
  return out;
}

std::string CaseLabel::to_string() const { return std::string(theorem_name(theorem)) + ":" + path_string(); }

const BigInt* CaseLabel::selector(std::string_view name) const {
  for (const auto& [key, value] : selectors)
    if (key == name) return &value;
  return nullptr;
}

namespace {

Mapped dispatch(const InjectionParams& params, const Partition& p, bool build) {
  if (!member(domain_family(params), p))
    throw InvalidArgument(p.to_string() + " is not in " + domain_family(params).to_string());
  switch (params.theorem) {
    case Theorem::T8:
    case Theorem::T9:
      return detail::map_large(params, p, build);
    case Theorem::T10:
      return detail::map_small_k(params, p, build);
    case Theorem::T12:
      return detail::map_general(params, p, build);
    case Theorem::T16:
    case Theorem::T17:
    case Theorem::T18:
    case Theorem::T19:
      return detail::map_gl2(params, p, build);
    case Theorem::L14easy: {
      Mapped m{detail::make_label(Theorem::L14easy, {"easy"}), {}};
      if (build) m.image = lemma14_easy_injection(params.L, params.s, p);
      return m;
    }
  }
  throw std::logic_error("unknown theorem");
}

}  // namespace

CaseLabel classify(const InjectionParams& params, const Partition& p) { return dispatch(params, p, false).label; }

Mapped map_partition(const InjectionParams& params, const Partition& p) { return dispatch(params, p, true); }

Partition apply(const InjectionParams& params, const Partition& p) { return dispatch(params, p, true).image; }

Partition witness(const InjectionParams& params, Int N) {
  if (N < 0) throw InvalidArgument("N must be nonnegative");
  switch (params.theorem) {
    case Theorem::T8:
    case Theorem::T9:
      return detail::witness_large(params, N);
    case Theorem::T10:
      return detail::witness_small_k(params, N);
    case Theorem::T12:
      return detail::witness_general(params, N);
    case Theorem::T16:
    case Theorem::T17:
    case Theorem::T18:
    case Theorem::T19:
      return detail::witness_gl2(params, N);
    case Theorem::L14easy:
      throw InvalidArgument("L14easy has no strictness witness");
  }
  throw std::logic_error("unknown theorem");
}

Signature::Signature(std::string description, std::function<bool(const BigInt&)> contains,
                     std::function<bool(const Partition&)> refine)
    : description_(std::move(description)), contains_(std::move(contains)), refine_(std::move(refine)) {}

bool Signature::matches(const Partition& image, Int s) const {
  if (!contains(image.freq(s))) return false;
  return !refine_ || refine_(image);
}

Signature case_signature(const InjectionParams& params, const CaseLabel& label) {
  if (label.theorem != params.theorem)
    throw InvalidArgument("label " + label.to_string() + " does not belong to " + describe(params));
  switch (params.theorem) {
    case Theorem::T8:
    case Theorem::T9:
      return detail::signature_large(params, label);
    case Theorem::T10:
      return detail::signature_small_k(params, label);
    case Theorem::T12:
      return detail::signature_general(params, label);
    case Theorem::T16:
    case Theorem::T17:
    case Theorem::T18:
    case Theorem::T19:
      return detail::signature_gl2(params, label);
    case Theorem::L14easy:
      return Signature("any", [](const BigInt& v) { return v >= 1; });
  }
  throw std::logic_error("unknown theorem");
}

std::vector<CaseLabel> all_case_labels(const InjectionParams& params) {
  switch (params.theorem) {
    case Theorem::T8:
    case Theorem::T9:
      return detail::labels_large(params);
    case Theorem::T10:
      return detail::labels_small_k(params);
    case Theorem::T12:
      return detail::labels_general(params);
    case Theorem::T16:
    case Theorem::T17:
    case Theorem::T18:
    case Theorem::T19:
      return detail::labels_gl2(params);
    case Theorem::L14easy:
      return {detail::make_label(Theorem::L14easy, {"easy"})};
  }
  throw std::logic_error("unknown theorem");
}

Partition lemma14_easy_injection(Int L, Int s, const Partition& p) {
  if (s < 1 || L < s + 1) throw InvalidArgument("lemma14_easy_injection requires L >= s+1");
  const SetSpec B = SetSpec::B(L, s);
  if (!member(B, p)) throw InvalidArgument(p.to_string() + " is not in " + B.to_string());
  PartitionBuilder b(p);
  b.add(L + s - 1, -1).add(s, 1).add(L - 1, 1);
  return b.build();
}

namespace detail {

CaseLabel make_label(Theorem t, std::vector<std::string> path) { return CaseLabel{t, std::move(path), {}}; }

const FixedSolution& fixed(const FixedKey& key, const Equation& eq) {
  try {
    return fixed_solution(key, eq);
  } catch (const BelowBound& e) {
    throw SolverPrecondition(e.what());
  } catch (const NotDivisible& e) {
    throw SolverPrecondition(e.what());
  } catch (const TooSmall& e) {
    throw SolverPrecondition(e.what());
  }
}

PairSolution fixed_pair(const FixedKey& key, const Equation& eq) { return std::get<PairSolution>(fixed(key, eq)); }

SimpleSolution fixed_simple(const FixedKey& key, const Equation& eq) {
  return std::get<SimpleSolution>(fixed(key, eq));
}

PairSolution solve_pair(Int a, Int b, Int n, bool shared_factor) {
  try {
    return shared_factor ? solve_pair_shared_factor(a, b, n) : sylvester_solve(a, b, n);
  } catch (const BelowBound& e) {
    throw SolverPrecondition(e.what());
  } catch (const NotDivisible& e) {
    throw SolverPrecondition(e.what());
  }
}

std::vector<Int> key_params(const InjectionParams& params) { return {params.L, params.s, params.k}; }

std::optional<Int> least_part_with(const Partition& p, Int lo, Int hi, Int min_freq) {
  for (const auto& e : p.entries()) {
    if (e.part > hi) break;
    if (e.part >= lo && e.freq >= min_freq) return e.part;
  }
  return std::nullopt;
}

void not_applicable(const InjectionParams& params, const Partition& p, const std::string& why) {
  throw NotApplicable(describe(params) + ": no subcase applies to " + p.to_string() + " (" + why + ")");
}

Signature set_signature(std::string description, std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  return Signature(std::move(description), [values = std::move(values)](const BigInt& v) {
    return v.fits_slong_p() && std::binary_search(values.begin(), values.end(), static_cast<Int>(v.get_si()));
  });
}

}  // namespace detail

}  // namespace partineq
