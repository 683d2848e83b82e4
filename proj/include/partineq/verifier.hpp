#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partineq/injections.hpp"
#include "partineq/partition.hpp"
#include "partineq/qseries.hpp"

namespace partineq {

// ---------------------------------------------------------------------------
// Inequality by counting

struct InequalityResult {
  BigInt lhs;  // |I(L,s,k)| at weight N
  BigInt rhs;  // |D(L,s)| at weight N
  bool strict = false;
};

/// Requires L >= 3 and s+1 <= k <= L+s.
InequalityResult verify_inequality(Int L, Int s, Int k, Int N);

// ---------------------------------------------------------------------------
// Injection verification

struct InjectionReport {
  InjectionParams params;
  Int N = 0;
  Int domain_size = 0;
  Int image_size = 0;
  Int not_applicable_count = 0;
  bool weight_ok = true;
  bool codomain_ok = true;
  bool injective = true;
  bool signature_ok = true;  // frequency of s lies in the case signature
  bool signature_checked = false;
  bool witness_attempted = false;
  bool witness_found = false;
  std::optional<Partition> witness;
  std::string witness_note;
  std::string method;  // "image-set" or "left-inverse"
  std::map<std::string, Int> case_counts;  // keyed by case path
  std::vector<std::string> failures;       // first few counterexamples

  /// Contract checks hold on every applicable partition.
  bool ok() const noexcept { return weight_ok && codomain_ok && injective && signature_ok; }
};

struct InjectionOptions {
  bool check_signatures = true;
  bool attempt_witness = true;
  std::size_t max_failures = 8;
};

/// Enumerates the domain at weight N, maps every partition and checks
/// weight, codomain, signature and injectivity (by an exact image set).
InjectionReport verify_injection(const InjectionParams& params, Int N, const InjectionOptions& opt = {});

/// Checks every partition in an explicit list (all of one weight or not);
/// the report's N is the maximum weight seen. Used for targeted samples.
InjectionReport verify_injection_on(const InjectionParams& params, const std::vector<Partition>& domain,
                                    const InjectionOptions& opt = {});

/// Exhaustive check of one of T16-T19 for every weight 1..N_max in a single
/// pass over the dense frequency vectors. Injectivity is proved with the
/// kernel's left inverse (decode(apply(pi)) == pi); a weight where that
/// fails is re-verified with an exact image set. Witnesses are attempted for
/// N >= witness_from and excluded from the image through the decoder; below
/// gl2_witness_from the codomain is searched for a partition outside the image.
std::vector<InjectionReport> verify_gl2_exhaustive(const InjectionParams& params, Int N_max, Int witness_from);

/// Smallest N from which strictness is claimed for T16-T19.
Int gl2_witness_from(const InjectionParams& params);

/// True when `w` is not the image of any domain partition of T16-T19,
/// decided through the left inverse.
bool gl2_outside_image(const Gl2Kernel& kernel, const Partition& w);

// ---------------------------------------------------------------------------
// Positivity scans

struct SeriesSelector {
  enum class Kind { H, G2, Lemma14 };
  Kind kind = Kind::H;
  Int L = 0, s = 0, k = 0;

  static SeriesSelector H(Int L, Int s, Int k) { return {Kind::H, L, s, k}; }
  static SeriesSelector G2(Int L) { return {Kind::G2, L, 2, L}; }
  static SeriesSelector Lemma14(Int L, Int s) { return {Kind::Lemma14, L, s, 0}; }
  std::string to_string() const;
  TruncatedSeries compute(Int T) const;
};

struct PositivityReport {
  SeriesSelector series;
  Int N_lo = 0, N_hi = 0, T = 0;
  std::vector<std::pair<Int, BigInt>> violations;  // negative coefficients
  /// Smallest n in [N_lo, N_hi] from which every scanned coefficient is
  /// positive; empty when the last coefficient is not positive.
  std::optional<Int> empirical_threshold;
  /// G2 only: the exceptional exponents the nonnegativity statement allows.
  std::vector<Int> expected_exceptions;
  /// G2: violations are exactly the expected exponents, each -1.
  /// Other series: no violation at or beyond the empirical threshold.
  bool pass = true;
};

/// Requires T >= N_hi >= N_lo >= 0.
PositivityReport scan_positivity(const SeriesSelector& series, Int N_lo, Int N_hi, Int T);

/// Exceptional exponents of the G_{L,2} nonnegativity statement.
std::vector<Int> g2_expected_exceptions(Int L);

// ---------------------------------------------------------------------------
// Tables

struct NamedCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct TableResult {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // computed
  std::vector<NamedCheck> checks;              // computed vs reference
  bool pass = true;
};

/// id in {T4, T5, T6, T7}; throws InvalidArgument otherwise.
TableResult reproduce_table(const std::string& id);
std::vector<std::string> table_ids();

// ---------------------------------------------------------------------------
// Conjecture suites

struct SuiteConfig {
  std::string id;  // C1, C2, C3, C5
  Int L_lo = 3, L_hi = 8;
  Int s_lo = 1, s_hi = 2;
  Int k_extra = 5;  // C3: k ranges over s+1..L+s+k_extra
  Int N_max = 300;
  unsigned jobs = 1;

  /// Grid and cap from the standard examples for `id`.
  static SuiteConfig defaults(const std::string& id);
};

struct SuiteEntry {
  Int L = 0, s = 0, k = 0;
  std::vector<std::pair<Int, BigInt>> failures;  // (N, difference) with difference < 0
  std::optional<Int> empirical_threshold;
  std::vector<Int> expected_exceptions;
  bool pass = true;
  std::string note;
};

struct SuiteSummary {
  SuiteConfig config;
  std::vector<SuiteEntry> entries;  // sorted by (L, s, k)
  bool pass = true;
};

SuiteSummary run_conjecture_suite(const SuiteConfig& config);

}  // namespace partineq
