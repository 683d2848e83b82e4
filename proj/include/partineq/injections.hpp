#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partineq/partition.hpp"
#include "partineq/types.hpp"

namespace partineq {

/// The constructive maps D(L,s) -> I(L,s,k) (and B -> A for the easy case
/// of the A/B comparison).
///
///   T8   k = L+s-1, L >= s+3
///   T9   L >= s+2, 2s+2 <= k <= L+s
///   T10  L >= 3s+3, s+1 <= k <= 2s+1
///   T12  L >= 3, s+1 <= k <= L+s
///   T16  s = 2, k = L, L >= 11
///   T17  s = 2, k = L, 5 <= L <= 10
///   T18  s = 2, k = L = 3
///   T19  s = 2, k = L = 4
///   L14easy  B(L,s) -> A(L,s), L >= s+1
enum class Theorem { T8, T9, T10, T12, T16, T17, T18, T19, L14easy };

std::string_view theorem_name(Theorem t);
/// Accepts the names produced by theorem_name(). Throws InvalidArgument.
Theorem parse_theorem(std::string_view name);
std::vector<Theorem> all_theorems();

struct InjectionParams {
  Theorem theorem = Theorem::T8;
  Int L = 0;
  Int s = 0;
  Int k = 0;
  /// Follow the published case split even where it leaves the codomain.
  /// Only affects T16: Case 2(A) with smallest part L+2 would insert the
  /// forbidden part L. The default routes it through subcase 2(A)(top).
  bool literal = false;
  friend bool operator==(const InjectionParams&, const InjectionParams&) = default;
};

/// Validates parameters. For T8 a zero k is replaced by L+s-1; for
/// T16-T19 zero s and k are replaced by 2 and L. Throws InvalidArgument
/// on violated constraints.
InjectionParams make_params(Theorem theorem, Int L, Int s = 0, Int k = 0, bool literal = false);

SetSpec domain_family(const InjectionParams& params);
SetSpec codomain_family(const InjectionParams& params);

/// Hierarchical subcase identifier, e.g. T16 with path {2,B,ii,b,alpha}
/// renders as "2(B)(ii)(b)(alpha)".
struct CaseLabel {
  Theorem theorem = Theorem::T8;
  std::vector<std::string> path;
  /// Selector values fixed by the classification (m0, l, i0, p, f, ...).
  std::vector<std::pair<std::string, BigInt>> selectors;

  std::string path_string() const;
  /// "T16:2(B)(ii)(b)(alpha)"
  std::string to_string() const;
  const BigInt* selector(std::string_view name) const;

  /// Labels compare by theorem and path only.
  friend bool operator==(const CaseLabel& a, const CaseLabel& b) {
    return a.theorem == b.theorem && a.path == b.path;
  }
};

/// First-match subcase of `p`, following the order of the construction.
/// Throws NotApplicable when no subcase applies (the partition lies below
/// the regime where the construction is defined) and InvalidArgument when
/// `p` is not in the domain family.
CaseLabel classify(const InjectionParams& params, const Partition& p);

struct Mapped {
  CaseLabel label;
  Partition image;
};

/// classify + apply in one pass.
Mapped map_partition(const InjectionParams& params, const Partition& p);

/// Image of `p`. Throws NotApplicable, SolverPrecondition or
/// NegativeFrequency as described for the individual cases.
Partition apply(const InjectionParams& params, const Partition& p);

/// A partition of N in the codomain whose frequency of s lies outside every
/// case signature. Throws SolverPrecondition when N is too small.
Partition witness(const InjectionParams& params, Int N);

/// Possible frequencies of s in images of one subcase.
class Signature {
 public:
  Signature(std::string description, std::function<bool(const BigInt&)> contains,
            std::function<bool(const Partition&)> refine = {});

  const std::string& description() const noexcept { return description_; }
  bool contains(const BigInt& freq_of_s) const { return contains_(freq_of_s); }
  bool contains(Int freq_of_s) const { return contains_(to_big(freq_of_s)); }
  /// contains(f_s(image)) and, where the frequency of s alone does not
  /// separate cases, the structural refinement (e.g. the second and third
  /// smallest parts for T16).
  bool matches(const Partition& image, Int s) const;

  /// Residue characterisation when one exists: members are congruent to one
  /// of `residues` modulo `modulus` (or to none of them when `excluded`).
  std::optional<Int> modulus;
  std::vector<Int> residues;
  bool excluded = false;

 private:
  std::string description_;
  std::function<bool(const BigInt&)> contains_;
  std::function<bool(const Partition&)> refine_;
};

Signature case_signature(const InjectionParams& params, const CaseLabel& label);

/// Every subcase path of the theorem, in classification order.
std::vector<CaseLabel> all_case_labels(const InjectionParams& params);

/// Remove one part L+s-1, insert parts s and L-1. Requires L >= s+1 and a
/// part L+s-1 in `p`, which must be in B(L,s).
Partition lemma14_easy_injection(Int L, Int s, const Partition& p);

// ---------------------------------------------------------------------------
// Dense kernels for the s = 2 maps (T16-T19). `freqs[i]` is the frequency of
// part i; the span must cover parts 0..L+2. Used by the exhaustive verifier.

/// Subcases of T16-T19 in classification order.
enum class Gl2Case : int {
  NotApplicable = 0,
  // T16
  T16_1, T16_2A, T16_2Atop, T16_2Bi, T16_2Biia, T16_2Biib_alpha, T16_2Biib_beta,
  // T17
  T17_1, T17_2, T17_3i, T17_3ii,
  // T18
  T18_1, T18_2, T18_3i, T18_3ii, T18_4i, T18_4ii,
  // T19
  T19_1, T19_2i, T19_2ii, T19_2iii,
};

CaseLabel gl2_case_label(Gl2Case c);

namespace detail {
struct Gl2Core;
}

class Gl2Kernel {
 public:
  /// Requires one of T16-T19.
  explicit Gl2Kernel(const InjectionParams& params);

  const InjectionParams& params() const noexcept { return params_; }
  /// Length the frequency spans must have: L+3 (parts 0..L+2).
  std::size_t width() const noexcept { return static_cast<std::size_t>(params_.L) + 3; }

  /// Classifies and maps the domain partition `freqs` in place. Returns
  /// NotApplicable (leaving `freqs` unchanged) when no subcase applies.
  Gl2Case apply(std::span<Int> freqs) const;

  /// Left inverse of apply() computed from the image alone. Returns false
  /// when `freqs` does not have the shape of any image; `freqs` is then in
  /// an unspecified state.
  bool decode(std::span<Int> freqs) const;

  /// Theorem-specialised inline core, used by the exhaustive verifier.
  const detail::Gl2Core& core() const noexcept { return *core_; }

 private:
  InjectionParams params_;
  std::shared_ptr<const detail::Gl2Core> core_;
};

}  // namespace partineq
