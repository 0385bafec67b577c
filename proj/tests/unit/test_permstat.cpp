#include "doctest.h"

#include <algorithm>
#include <map>

#include "polyalg/permstat.hpp"

using namespace polyalg;

TEST_CASE("statistics of permutations") {
  auto sigma = Permutation::parse("(13)(2658)(4)(7)", 8);
  auto st = stats(sigma);
  auto arr = Arrangement::braid(8);
  CHECK(st.exc == 3);
  CHECK(st.supp == arr->parse_flat("{13,2568,4,7}"));
  CHECK(stats(Permutation::parse("(1 2 3)", 3)).exc == 2);
  auto id = stats(Permutation::identity(5));
  CHECK(id.exc == 0);
  CHECK(id.des == 0);
  CHECK(id.supp == Arrangement::braid(5)->flat(Arrangement::braid(5)->top()));
}

TEST_CASE("statistics of signed permutations") {
  auto sigma = SignedPermutation::parse("(1)(-1)(2 -2)(3 4 -3 -4)(5 -6)(-5 6)", 6);
  auto st = stats_signed(sigma);
  auto b6 = Arrangement::type_b(6);
  CHECK(b6->format(st.supp) == b6->format(b6->parse_flat("{0:2 -2 3 -3 4 -4,1,5 -6}")));

  auto neg = stats_signed(SignedPermutation({-1, -2}));
  CHECK(neg.exc == 0);
  CHECK(neg.fneg == 2);
  CHECK(neg.exc_b == 1);
  CHECK(neg.supp == Arrangement::type_b(2)->flat(0));

  auto id = stats_signed(SignedPermutation::identity(3));
  CHECK(id.exc_b == 0);
  CHECK(id.supp == Arrangement::type_b(3)->flat(Arrangement::type_b(3)->top()));
}

TEST_CASE("cycle notation round-trips") {
  auto s = SignedPermutation::parse("(1 -2)(-1 2)(3)(-3)", 3);
  CHECK(SignedPermutation::parse(s.to_string(), 3) == s);
  auto p = Permutation::parse("(1 4)(2 3 5)", 5);
  CHECK(Permutation::parse(p.to_string(), 5) == p);
  CHECK_THROWS_AS(Permutation::parse("(1 1)", 3), InvalidArgument);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), InvalidArgument);
}

TEST_CASE("descents and excedances are equidistributed") {
  for (int d = 1; d <= 7; ++d) {
    std::map<int, long long> des, exc;
    for_each_permutation(d, [&](const Permutation& s) {
      auto st = stats(s);
      ++des[st.des];
      ++exc[st.exc];
    });
    CHECK(des == exc);
  }
  for (int d = 1; d <= 5; ++d) {
    std::map<int, long long> des, excb;
    for_each_signed_permutation(d, [&](const SignedPermutation& s) {
      auto st = stats_signed(s);
      ++des[st.des];
      ++excb[st.exc_b];
    });
    CHECK(des == excb);
  }
}

TEST_CASE("exc_B is additive over the blocks of the support") {
  for (int d = 1; d <= 4; ++d) {
    bool ok = true;
    for_each_signed_permutation(d, [&](const SignedPermutation& s) {
      ok = ok && stats_signed(s).exc_b == exc_b_by_blocks(s);
    });
    CHECK(ok);
  }
  CHECK(exc_prec({3}) == 0);
  CHECK_THROWS_AS(exc_prec({2, -2}), InvalidArgument);
}

TEST_CASE("increasing forest of a permutation") {
  auto sigma = Permutation::parse("(7 3 6 9 5 1)(4 10 8 2)", 10);
  auto forest = forest_of(sigma);
  CHECK(forest == IncreasingForest::parse("1(3(7),5(6,9)) 2(4,8(10))"));
  CHECK(forest.leaves().size() == 5);
  CHECK(stats(sigma).exc == 5);
  CHECK(perm_of(forest) == sigma);

  auto id = forest_of(Permutation::identity(4));
  CHECK(id.roots().size() == 4);
  CHECK(id.leaves().empty());
  CHECK_THROWS_AS(IncreasingForest(2, {2, 0}), InvalidArgument);
}

TEST_CASE("forest bijection is inverse to itself and carries the statistics") {
  for (int d = 1; d <= 6; ++d) {
    bool ok = true;
    auto arr = Arrangement::braid(d);
    for_each_permutation(d, [&](const Permutation& s) {
      auto t = forest_of(s);
      auto st = stats(s);
      ok = ok && perm_of(t) == s && forest_of(perm_of(t)) == t;
      ok = ok && static_cast<int>(t.leaves().size()) == st.exc;
      ok = ok && arr->canonical_flat(t.components(), 0) == st.supp;
    });
    CHECK(ok);
  }
}

TEST_CASE("filtered enumeration") {
  auto a3 = Arrangement::braid(3);
  auto cyc = enumerate_symmetric(3, {a3->flat(0), std::nullopt});
  REQUIRE(cyc.size() == 2);
  std::vector<int> excs;
  for (const auto& s : cyc) excs.push_back(stats(s).exc);
  std::sort(excs.begin(), excs.end());
  CHECK(excs == std::vector<int>{1, 2});

  auto b2 = Arrangement::type_b(2);
  auto signed_cyc = enumerate_hyperoctahedral(2, {b2->flat(0), std::nullopt});
  REQUIRE(signed_cyc.size() == 3);
  excs.clear();
  for (const auto& s : signed_cyc) excs.push_back(stats_signed(s).exc_b);
  std::sort(excs.begin(), excs.end());
  CHECK(excs == std::vector<int>{1, 1, 2});

  CHECK(enumerate_symmetric(5).size() == 120);
  CHECK(enumerate_hyperoctahedral(3).size() == 48);
  CHECK(enumerate_symmetric(4, {std::nullopt, 0}).size() == 1);
  CHECK_THROWS_AS(enumerate_symmetric(enumeration_bounds().max_symmetric + 1), ResourceLimit);
}
