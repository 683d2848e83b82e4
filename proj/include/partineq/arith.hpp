#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "partineq/types.hpp"

namespace partineq {

/// Nonnegative solution of a*x + b*y = n.
struct PairSolution {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const PairSolution&, const PairSolution&) = default;
};

/// Nonnegative X_{s+1}, ..., X_{2s+1} with sum_i i * X_i = n.
struct SimpleSolution {
  Int s = 0;
  std::vector<Int> counts;  // counts[j] is X_{s+1+j}

  /// X_part for s+1 <= part <= 2s+1, zero elsewhere.
  Int at(Int part) const noexcept;
  /// Number of nonzero entries.
  int support() const noexcept;
  friend bool operator==(const SimpleSolution&, const SimpleSolution&) = default;
};

/// (a-1)(b-1), the least N such that every n >= N is a nonnegative
/// combination of the coprime a, b. Throws InvalidArgument unless gcd(a,b)=1.
Int frobenius_bound(Int a, Int b);

/// Solution of a*x + b*y = n with the least nonnegative x. Succeeds for every
/// n >= (a-1)(b-1); below that bound the solution is returned if one exists
/// and BelowBound is thrown otherwise.
PairSolution sylvester_solve(Int a, Int b, Int n);

/// Solves a*x + b*y = n with d = gcd(a,b) > 1 allowed, via
/// sylvester_solve(a/d, b/d, n/d). Throws NotDivisible when d does not
/// divide n.
PairSolution solve_pair_shared_factor(Int a, Int b, Int n);

/// Division-algorithm solution of (s+1)X_{s+1} + ... + (2s+1)X_{2s+1} = n:
/// with n = (s+1)q + r, X_{s+1} = q if r = 0, otherwise X_{s+1} = q-1 and
/// X_{s+1+r} = 1. Throws TooSmall if n <= s.
SimpleSolution simple_solve(Int s, Int n);

/// A linear equation whose nonnegative solution is to be fixed once.
struct Equation {
  enum class Kind {
    Pair,         // a*x + b*y = n, gcd(a,b) = 1
    SharedFactor, // a*x + b*y = n, gcd(a,b) | n
    Simple,       // consecutive parts s+1..2s+1 summing to n
  };
  Kind kind = Kind::Pair;
  Int a = 0;  // Simple: s
  Int b = 0;
  Int n = 0;
  friend bool operator==(const Equation&, const Equation&) = default;
};

using FixedSolution = std::variant<PairSolution, SimpleSolution>;

/// Identifies one "fix a solution and keep it fixed" choice: the theorem,
/// the symbol family (e.g. "r", "xy", "zw"), the parameters (L,s,k) and the
/// family index (j, m, or (t,i)).
struct FixedKey {
  std::string theorem;
  std::string family;
  std::vector<Int> params;
  std::vector<Int> index;
  friend auto operator<=>(const FixedKey&, const FixedKey&) = default;
};

/// Solves `eq` with the canonical solver for its kind.
FixedSolution solve(const Equation& eq);

/// Memoised solve: the first call for `key` solves `eq` and stores the
/// result; later calls return the stored solution. Safe to call from
/// several threads. Throws std::logic_error if the same key is requested
/// with a different equation.
const FixedSolution& fixed_solution(const FixedKey& key, const Equation& eq);

/// Number of memoised entries (diagnostics).
std::size_t fixed_solution_cache_size();

}  // namespace partineq
