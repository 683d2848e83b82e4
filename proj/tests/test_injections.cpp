#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "partineq/arith.hpp"
#include "partineq/injections.hpp"
#include "partineq/verifier.hpp"

using namespace partineq;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// Case groups that share a frequency signature by construction.
std::string group(const InjectionParams& params, const std::string& path) {
  if (params.theorem == Theorem::T12 && path.rfind("2(b)", 0) == 0) return "2(b)";
  return path;
}

// Every applicable domain partition up to N_max: its image matches its own
// case signature and no signature of another case group.
void check_separation(const InjectionParams& params, Int N_max) {
  const auto labels = all_case_labels(params);
  std::vector<Signature> sigs;
  for (const auto& l : labels) sigs.push_back(case_signature(params, l));
  std::set<Partition> images;
  Int mapped = 0;
  for (Int N = 1; N <= N_max; ++N)
    for_each_member(domain_family(params), N, [&](const Partition& p) {
      Mapped m;
      try {
        m = map_partition(params, p);
      } catch (const NotApplicable&) {
        return;
      } catch (const SolverPrecondition&) {
        return;
      }
      ++mapped;
      CHECK(m.image.weight() == N);
      CHECK(member(codomain_family(params), m.image));
      CHECK(images.insert(m.image).second);
      const std::string own = group(params, m.label.path_string());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const bool same = group(params, labels[i].path_string()) == own;
        const bool match = sigs[i].matches(m.image, params.s);
        if (same && labels[i] == m.label) CHECK_MESSAGE(match, p.to_string() << " -> " << m.image.to_string());
        if (!same) CHECK_MESSAGE(!match, p.to_string() << " also matches " << labels[i].path_string());
      }
    });
  CHECK(mapped > 0);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(make_params(Theorem::T8, 4, 1).k == 4);
  const auto g = make_params(Theorem::T16, 11);
  CHECK(g.s == 2);
  CHECK(g.k == 11);
  CHECK_THROWS_AS(make_params(Theorem::T8, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(make_params(Theorem::T16, 10), InvalidArgument);
  CHECK_THROWS_AS(make_params(Theorem::T17, 11), InvalidArgument);
  CHECK_THROWS_AS(make_params(Theorem::T18, 4), InvalidArgument);
  CHECK_THROWS_AS(make_params(Theorem::T10, 5, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(make_params(Theorem::T9, 4, 1, 3), InvalidArgument);
  CHECK(parse_theorem("T17") == Theorem::T17);
  CHECK_THROWS_AS(parse_theorem("T20"), InvalidArgument);
  for (Theorem t : all_theorems()) CHECK(parse_theorem(theorem_name(t)) == t);
}

TEST_CASE("classification of the worked examples") {
  const auto t16 = make_params(Theorem::T16, 11);
  const CaseLabel a = classify(t16, P("3,5"));
  CHECK(a.path_string() == "2(B)(ii)(b)(alpha)");
  CHECK(a.to_string() == "T16:2(B)(ii)(b)(alpha)");
  REQUIRE(a.selector("m0") != nullptr);
  CHECK(*a.selector("m0") == 5);
  CHECK(classify(make_params(Theorem::T19, 4), P("3^2,5")).path_string() == "2(i)");
  CHECK(classify(make_params(Theorem::T8, 4, 1), P("2,4")).path_string() == "2(a)");
  CHECK_THROWS_AS(classify(t16, P("2,3")), InvalidArgument);
  CHECK_THROWS_AS(classify(t16, P("3")), NotApplicable);
}

TEST_CASE("images of the worked examples") {
  CHECK(apply(make_params(Theorem::T16, 11), P("3,5")) == P("2,3,3"));
  CHECK(apply(make_params(Theorem::T18, 3), P("3^2,4")) == P("2^3,4"));
  CHECK(apply(make_params(Theorem::T17, 5), P("5^2")) == P("2^5"));
  const Mapped m = map_partition(make_params(Theorem::T17, 5), P("5^2"));
  CHECK(m.label.path_string() == "1");
  CHECK(m.image == P("2^5"));
}

TEST_CASE("witnesses") {
  CHECK(witness(make_params(Theorem::T16, 11), 14) == P("2,3^4"));
  for (Int N : {40, 77, 200}) {
    const Partition w = witness(make_params(Theorem::T8, 4, 1), N * 10);
    const auto [x, y] = oracle::least_x(2, 3, N * 10 - 10);
    CHECK(w == Partition::from_entries({{1, 10}, {2, x}, {3, y}}));
  }
  for (Int N = 22; N <= 60; ++N) {
    const auto [x, y] = oracle::least_x(3, 4, N - 16);
    CHECK(witness(make_params(Theorem::T17, 5), N) == Partition::from_entries({{2, 8}, {3, x}, {4, y}}));
  }
  CHECK_THROWS_AS(witness(make_params(Theorem::T16, 11), 10), NotApplicable);
}

TEST_CASE("witness frequency lies outside every signature") {
  struct Row {
    InjectionParams params;
    Int lo, hi;
  };
  const std::vector<Row> rows = {
      {make_params(Theorem::T8, 4, 1), 60000, 60040},
      {make_params(Theorem::T16, 11), 14, 80},
      {make_params(Theorem::T17, 5), 22, 80},
      {make_params(Theorem::T17, 10), 67, 120},
      {make_params(Theorem::T18, 3), 44, 120},
      {make_params(Theorem::T19, 4), 21, 120},
  };
  for (const auto& r : rows) {
    const auto labels = all_case_labels(r.params);
    for (Int N = r.lo; N <= r.hi; ++N) {
      const Partition w = witness(r.params, N);
      CHECK(w.weight() == N);
      CHECK(member(codomain_family(r.params), w));
      for (const auto& l : labels) CHECK_FALSE(case_signature(r.params, l).matches(w, r.params.s));
    }
  }
}

TEST_CASE("signatures of single cases") {
  const auto t8 = make_params(Theorem::T8, 4, 1);
  const Signature one_a = case_signature(t8, CaseLabel{Theorem::T8, {"1", "a"}, {}});
  CHECK(one_a.contains(Int{24}));
  CHECK(one_a.contains(Int{120}));
  CHECK_FALSE(one_a.contains(Int{18}));
  CHECK(one_a.modulus == 12);
  const Signature two_b = case_signature(t8, CaseLabel{Theorem::T8, {"2", "b"}, {}});
  CHECK(two_b.contains(Int{14}));
  CHECK_FALSE(two_b.contains(Int{15}));
  CHECK_THROWS_AS(case_signature(t8, CaseLabel{Theorem::T8, {"9"}, {}}), InvalidArgument);
}

TEST_CASE("frequency signatures are pairwise disjoint") {
  const std::vector<InjectionParams> params = {
      make_params(Theorem::T8, 4, 1),  make_params(Theorem::T8, 5, 2),   make_params(Theorem::T9, 3, 1, 4),
      make_params(Theorem::T9, 4, 2, 6), make_params(Theorem::T10, 6, 1, 2), make_params(Theorem::T10, 9, 2, 4),
      make_params(Theorem::T17, 7),    make_params(Theorem::T18, 3),     make_params(Theorem::T19, 4),
  };
  for (const auto& p : params) {
    const auto labels = all_case_labels(p);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        const Signature a = case_signature(p, labels[i]), b = case_signature(p, labels[j]);
        for (Int f = 0; f <= 3000; ++f)
          CHECK_MESSAGE(!(a.contains(f) && b.contains(f)),
                        theorem_name(p.theorem) << " " << labels[i].path_string() << " / " << labels[j].path_string()
                                                << " share " << f);
      }
  }
}

TEST_CASE("images are separated by case signatures") {
  check_separation(make_params(Theorem::T16, 11), 40);
  check_separation(make_params(Theorem::T16, 13), 36);
  for (Int L = 5; L <= 10; ++L) check_separation(make_params(Theorem::T17, L), 36);
  check_separation(make_params(Theorem::T18, 3), 60);
  check_separation(make_params(Theorem::T19, 4), 60);
  check_separation(make_params(Theorem::T8, 4, 1), 40);
  check_separation(make_params(Theorem::T9, 3, 1, 4), 40);
  check_separation(make_params(Theorem::T10, 6, 1, 3), 40);
  check_separation(make_params(Theorem::T12, 3, 1, 3), 40);
  check_separation(make_params(Theorem::T12, 4, 2, 5), 40);
}

TEST_CASE("dense kernel agrees with the sparse map and inverts it") {
  for (const auto& params : {make_params(Theorem::T16, 11), make_params(Theorem::T16, 12), make_params(Theorem::T17, 6),
                             make_params(Theorem::T18, 3), make_params(Theorem::T19, 4)}) {
    const Gl2Kernel kernel(params);
    for (Int N = 1; N <= 40; ++N)
      for_each_member(domain_family(params), N, [&](const Partition& p) {
        std::vector<Int> g(kernel.width(), 0);
        for (const auto& e : p.entries()) g[e.part] = e.freq;
        const auto before = g;
        const Gl2Case c = kernel.apply(g);
        if (c == Gl2Case::NotApplicable) {
          CHECK(g == before);
          CHECK_THROWS_AS(apply(params, p), NotApplicable);
          return;
        }
        std::vector<Int> expect(kernel.width(), 0);
        const Mapped m = map_partition(params, p);
        for (const auto& e : m.image.entries()) expect[e.part] = e.freq;
        CHECK(g == expect);
        CHECK(gl2_case_label(c) == m.label);
        CHECK(kernel.decode(g));
        CHECK(g == before);
      });
  }
}

TEST_CASE("the unrepaired T16 split leaves the codomain") {
  const auto literal = make_params(Theorem::T16, 11, 2, 11, true);
  const Partition p = P("13");
  CHECK(classify(literal, p).path_string() == "2(A)");
  const Partition img = apply(literal, p);
  CHECK(img.freq(11) == 1);
  CHECK_FALSE(member(codomain_family(literal), img));

  const auto repaired = make_params(Theorem::T16, 11);
  const Mapped m = map_partition(repaired, p);
  CHECK(m.label.path_string() == "2(A)(top)");
  CHECK(m.image == P("2^5,3"));
  CHECK(member(codomain_family(repaired), m.image));
}

TEST_CASE("easy A/B injection") {
  CHECK(lemma14_easy_injection(4, 2, P("5")) == P("2,3"));
  CHECK(lemma14_easy_injection(3, 2, P("4,4")) == P("2,2,4"));
  CHECK_THROWS_AS(lemma14_easy_injection(3, 3, P("5")), InvalidArgument);
  CHECK_THROWS_AS(lemma14_easy_injection(4, 2, P("4")), InvalidArgument);
}
