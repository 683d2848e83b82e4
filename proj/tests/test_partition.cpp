#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "partineq/partition.hpp"

using namespace partineq;

TEST_CASE("from_entries sums weight and merges duplicates") {
  const Partition p = Partition::from_entries({{2, 1}, {3, 2}});
  CHECK(p.weight() == 8);
  CHECK(p.freq(2) == 1);
  CHECK(p.freq(3) == 2);

  const Partition e = Partition::from_entries({});
  CHECK(e.empty());
  CHECK(e.weight() == 0);

  const Partition m = Partition::from_entries({{4, 2}, {4, 1}});
  CHECK(m.freq(4) == 3);
  CHECK(m.weight() == 12);
  CHECK(m.distinct_parts() == 1);

  CHECK_THROWS_AS(Partition::from_entries({{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Partition::from_entries({{3, -1}}), InvalidArgument);
}

TEST_CASE("parse accepts exponent and repeated notation") {
  CHECK(Partition::parse("2^3,5,7^2") == Partition::from_entries({{2, 3}, {5, 1}, {7, 2}}));
  CHECK(Partition::parse("5,3,3") == Partition::from_parts({3, 3, 5}));
  CHECK(Partition::parse(" 3 , 5 ") == Partition::from_parts({5, 3}));
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("()").empty());
  CHECK_THROWS_AS(Partition::parse("3,,5"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("x"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("0"), InvalidArgument);
}

TEST_CASE("round trip through to_string") {
  for (const char* text : {"2,3^2", "1^10,2^4,3", "7"}) CHECK(Partition::parse(text).to_string() == text);
  const Partition p = Partition::parse("2,3^2,9");
  CHECK(p.parts() == std::vector<Int>{9, 3, 3, 2});
  CHECK(p.num_parts() == 4);
  CHECK(p.smallest_part() == 2);
  CHECK(p.largest_part() == 9);
  CHECK_THROWS_AS(Partition{}.smallest_part(), InvalidArgument);
}

TEST_CASE("builder rejects a frequency left negative") {
  PartitionBuilder b(Partition::parse("3,5"));
  b.add(5, -1).add(2, 1).add(3, 2);
  CHECK(b.build() == Partition::parse("2,3^3"));
  b.add(7, -1);
  CHECK_THROWS_AS(b.build(), NegativeFrequency);
  PartitionBuilder t;
  t.add(4, -1).add(4, 1);
  CHECK(t.build().empty());
}

TEST_CASE("membership follows the family definitions") {
  CHECK(member(SetSpec::I(3, 2, 3), Partition::parse("2")));
  CHECK_FALSE(member(SetSpec::D(3, 2), Partition::parse("2")));
  CHECK_FALSE(member(SetSpec::I(3, 2, 3), Partition::parse("2,3")));
  CHECK_FALSE(member(SetSpec::D(3, 2), Partition{}));
  CHECK(member(SetSpec::F(3, 2), Partition{}));
  CHECK(member(SetSpec::B(3, 2), Partition::parse("4")));
  CHECK_FALSE(member(SetSpec::E(3, 2), Partition::parse("4")));
  CHECK(member(SetSpec::A(3, 2), Partition::parse("2,5")));
  CHECK_FALSE(member(SetSpec::A(3, 2), Partition::parse("2,6")));
  CHECK(SetSpec::C(5, 2) == SetSpec::I(5, 2, 6));
  CHECK(SetSpec::Cstar(5, 2) == SetSpec::I(5, 2, 5));
  CHECK_THROWS_AS(SetSpec::Cstar(3, 3), InvalidArgument);
  CHECK_THROWS_AS(SetSpec::I(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(SetSpec::I(3, 2, 6), InvalidArgument);
}

TEST_CASE("small enumerations") {
  const auto d3 = enumerate(SetSpec::D(3, 2), 3);
  REQUIRE(d3.size() == 1);
  CHECK(d3[0] == Partition::parse("3"));
  CHECK(enumerate(SetSpec::I(11, 2, 11), 3).empty());
  const auto d8 = enumerate(SetSpec::D(3, 2), 8);
  const std::set<Partition> got(d8.begin(), d8.end());
  CHECK(got == std::set<Partition>{Partition::parse("3,5"), Partition::parse("4,4")});
  CHECK(count(SetSpec::D(3, 2), 3) == 1);
  CHECK(count(SetSpec::D(3, 2), 0) == 0);
  CHECK(count(SetSpec::I(3, 2, 3), 2) == 1);
  CHECK_THROWS_AS(enumerate(SetSpec::D(3, 2), 600), InvalidArgument);
}

TEST_CASE("enumeration and counting agree with brute force") {
  for (Int L = 3; L <= 6; ++L)
    for (Int s = 1; s <= 3; ++s) {
      const auto tD = count_table(SetSpec::D(L, s), 30);
      for (Int N = 0; N <= 30; ++N) {
        CHECK(tD[N] == oracle::count_D(L, s, N));
        CHECK(count(SetSpec::D(L, s), N) == tD[N]);
      }
      for (Int k = s + 1; k <= L + s; ++k) {
        const auto tI = count_table(SetSpec::I(L, s, k), 30);
        for (Int N = 0; N <= 30; ++N) CHECK(tI[N] == oracle::count_I(L, s, k, N));
      }
    }
}

TEST_CASE("enumerate yields distinct members of the right weight") {
  for (const SetSpec spec : {SetSpec::D(4, 2), SetSpec::Cstar(5, 2), SetSpec::A(3, 1), SetSpec::B(3, 1),
                             SetSpec::E(4, 2), SetSpec::F(4, 2)}) {
    for (Int N = 0; N <= 25; ++N) {
      const auto list = enumerate(spec, N);
      std::set<Partition> seen;
      for (const auto& p : list) {
        CHECK(p.weight() == N);
        CHECK(member(spec, p));
        CHECK(seen.insert(p).second);
      }
      CHECK(count(spec, N) == static_cast<long>(list.size()));
      Int streamed = 0;
      for_each_member(spec, N, [&](const Partition&) { ++streamed; });
      CHECK(streamed == static_cast<Int>(list.size()));
    }
  }
}
