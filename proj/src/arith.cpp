#include "partineq/arith.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace partineq {

namespace {

std::string triple(Int a, Int b, Int n) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ")";
}

// Inverse of a modulo m for gcd(a,m) = 1, m >= 1.
Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += m;
  return static_cast<Int>(t);
}

}  // namespace

Int SimpleSolution::at(Int part) const noexcept {
  const Int j = part - (s + 1);
  if (j < 0 || j >= static_cast<Int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(j)];
}

int SimpleSolution::support() const noexcept {
  int n = 0;
  for (Int c : counts) n += c != 0;
  return n;
}

Int frobenius_bound(Int a, Int b) {
  if (a < 1 || b < 1) throw InvalidArgument("frobenius_bound needs positive a, b");
  if (std::gcd(a, b) != 1) throw InvalidArgument("frobenius_bound needs coprime a, b, got " + triple(a, b, 0));
  return checked_mul(a - 1, b - 1);
}

PairSolution sylvester_solve(Int a, Int b, Int n) {
  const Int bound = frobenius_bound(a, b);
  if (n < 0) throw BelowBound("no nonnegative solution for negative n " + triple(a, b, n));
  // Least x >= 0 with a*x = n (mod b); every solution has x congruent to it.
  const __int128 x = static_cast<__int128>(n % b) * mod_inverse(a, b) % b;
  const __int128 rest = static_cast<__int128>(n) - static_cast<__int128>(a) * x;
  if (rest < 0) {
    // Only possible strictly below the Frobenius bound.
    if (n >= bound) throw std::logic_error("sylvester_solve failed above the Frobenius bound " + triple(a, b, n));
    throw BelowBound("a*x + b*y = n has no nonnegative solution " + triple(a, b, n));
  }
  return PairSolution{static_cast<Int>(x), static_cast<Int>(rest / b)};
}

PairSolution solve_pair_shared_factor(Int a, Int b, Int n) {
  if (a < 1 || b < 1) throw InvalidArgument("solve_pair_shared_factor needs positive a, b");
  const Int d = std::gcd(a, b);
  if (n % d != 0) throw NotDivisible("gcd(a,b) does not divide n " + triple(a, b, n));
  return sylvester_solve(a / d, b / d, n / d);
}

SimpleSolution simple_solve(Int s, Int n) {
  if (s < 1) throw InvalidArgument("simple_solve needs s >= 1");
  if (n <= s) throw TooSmall("simple_solve needs n >= s+1, got s=" + std::to_string(s) + ", n=" + std::to_string(n));
  SimpleSolution out{s, std::vector<Int>(static_cast<std::size_t>(s + 1), 0)};
  const Int q = n / (s + 1);
  const Int r = n % (s + 1);
  if (r == 0) {
    out.counts[0] = q;
  } else {
    out.counts[0] = q - 1;
    out.counts[static_cast<std::size_t>(r)] = 1;
  }
  return out;
}

FixedSolution solve(const Equation& eq) {
  switch (eq.kind) {
    case Equation::Kind::Pair:
      return sylvester_solve(eq.a, eq.b, eq.n);
    case Equation::Kind::SharedFactor:
      return solve_pair_shared_factor(eq.a, eq.b, eq.n);
    case Equation::Kind::Simple:
      return simple_solve(eq.a, eq.n);
  }
  throw std::logic_error("unknown equation kind");
}

namespace {

struct Memo {
  std::shared_mutex mutex;
  std::map<FixedKey, std::pair<Equation, FixedSolution>> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

const FixedSolution& fixed_solution(const FixedKey& key, const Equation& eq) {
  Memo& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.table.find(key);
    if (it != m.table.end()) {
      if (!(it->second.first == eq)) throw std::logic_error("fixed_solution key reused with a different equation");
      return it->second.second;
    }
  }
  FixedSolution value = solve(eq);  // may throw; nothing is stored then
  std::unique_lock lock(m.mutex);
  auto [it, inserted] = m.table.try_emplace(key, eq, std::move(value));
  if (!inserted && !(it->second.first == eq))
    throw std::logic_error("fixed_solution key reused with a different equation");
  // std::map nodes are stable, so the reference outlives the lock.
  return it->second.second;
}

std::size_t fixed_solution_cache_size() {
  Memo& m = memo();
  std::shared_lock lock(m.mutex);
  return m.table.size();
}

}  // namespace partineq
