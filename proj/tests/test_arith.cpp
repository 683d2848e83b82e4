#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "partineq/arith.hpp"

using namespace partineq;

TEST_CASE("frobenius bound") {
  CHECK(frobenius_bound(3, 4) == 6);
  CHECK(frobenius_bound(3, 5) == 8);
  CHECK(frobenius_bound(1, 7) == 0);
  CHECK_THROWS_AS(frobenius_bound(4, 6), InvalidArgument);
}

TEST_CASE("sylvester_solve picks the least x") {
  CHECK(sylvester_solve(3, 4, 6) == PairSolution{2, 0});
  CHECK(sylvester_solve(3, 5, 8) == PairSolution{1, 1});
  CHECK_THROWS_AS(sylvester_solve(3, 5, 7), BelowBound);
  // Below the bound but representable.
  CHECK(sylvester_solve(3, 5, 5) == PairSolution{0, 1});
  for (Int a = 2; a <= 12; ++a)
    for (Int b = 2; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (Int n = 0; n <= 150; ++n) {
        const auto [x, y] = oracle::least_x(a, b, n);
        if (x < 0) {
          CHECK_THROWS_AS(sylvester_solve(a, b, n), BelowBound);
        } else {
          CHECK(sylvester_solve(a, b, n) == PairSolution{x, y});
        }
      }
    }
}

TEST_CASE("shared-factor solve divides by the gcd") {
  const PairSolution s = solve_pair_shared_factor(4, 6, 14);
  CHECK(4 * s.x + 6 * s.y == 14);
  CHECK(s == PairSolution{2, 1});
  CHECK(solve_pair_shared_factor(2, 4, 6) == PairSolution{1, 1});
  CHECK_THROWS_AS(solve_pair_shared_factor(4, 6, 7), NotDivisible);
}

TEST_CASE("simple_solve follows the division algorithm") {
  const SimpleSolution a = simple_solve(2, 7);
  CHECK(a.at(3) == 1);
  CHECK(a.at(4) == 1);
  CHECK(a.at(5) == 0);
  CHECK(simple_solve(2, 6).at(3) == 2);
  CHECK(simple_solve(1, 2).at(2) == 1);
  CHECK_THROWS_AS(simple_solve(3, 3), TooSmall);
  for (Int s = 1; s <= 6; ++s)
    for (Int n = s + 1; n <= 80; ++n) {
      const SimpleSolution sol = simple_solve(s, n);
      Int total = 0;
      for (Int part = s + 1; part <= 2 * s + 1; ++part) {
        CHECK(sol.at(part) >= 0);
        total += part * sol.at(part);
      }
      CHECK(total == n);
      CHECK(sol.support() <= 2);
    }
}

TEST_CASE("fixed solutions are memoised per key") {
  const FixedKey key{"T8", "r", {4, 1, 4}, {1}};
  const Equation eq{Equation::Kind::Simple, 1, 0, 3};
  const auto& first = std::get<SimpleSolution>(fixed_solution(key, eq));
  CHECK(first.at(2) == 0);
  CHECK(first.at(3) == 1);
  const auto& again = std::get<SimpleSolution>(fixed_solution(key, eq));
  CHECK(&first == &again);
  CHECK_THROWS_AS(fixed_solution(key, Equation{Equation::Kind::Simple, 1, 0, 5}), std::logic_error);

  const auto& xy = std::get<PairSolution>(
      fixed_solution({"T8", "xy", {4, 1, 4}, {104}}, {Equation::Kind::Pair, 6, 7, 102}));
  CHECK(xy == PairSolution{3, 12});
}

TEST_CASE("fixed_solution is consistent across threads") {
  std::vector<std::thread> pool;
  std::vector<PairSolution> got(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      got[t] = std::get<PairSolution>(
          fixed_solution({"test", "threads", {}, {7}}, {Equation::Kind::Pair, 5, 7, 123}));
    });
  for (auto& th : pool) th.join();
  for (const auto& g : got) CHECK(g == got[0]);
  CHECK(5 * got[0].x + 7 * got[0].y == 123);
}
