#include "doctest.h"

#include "polyalg/hopfgp.hpp"

using namespace polyalg;

namespace {

Point pt(std::vector<Rational> v) { return v; }

LabeledGP seg(int a, int b) { return LabeledGP::permutahedron({a, b}); }

}  // namespace

TEST_CASE("products") {
  auto p = LabeledGP::permutahedron({2, 3});
  auto point = LabeledGP::from_points({1}, {pt({5})});
  auto prod = gp_product(point, p);
  CHECK(prod.labels() == std::vector<int>{1, 2, 3});
  REQUIRE(prod.vertices().size() == 2);
  for (const auto& v : prod.vertices()) CHECK(v[0] == 5);
  CHECK(gp_product(LabeledGP(), p) == p);

  auto square = gp_product(seg(1, 2), seg(3, 4));
  CHECK(FaceLattice(square.polytope()).f_vector() == std::vector<long long>{4, 4, 1});

  auto pp = gp_product(seg(1, 2), LabeledGP::permutahedron({3, 4}));
  CHECK(h_polynomial(pp.polytope()) == h_polynomial(permutahedron(2)) * h_polynomial(permutahedron(2)));
  CHECK_THROWS_AS(gp_product(seg(1, 2), seg(2, 3)), InvalidArgument);
}

TEST_CASE("coproduct of a segment") {
  auto p = LabeledGP::permutahedron({1, 2});
  auto [l, r] = gp_coproduct(p, {1});
  CHECK(l.vertices() == std::vector<Point>{pt({2})});
  CHECK(r.vertices() == std::vector<Point>{pt({1})});
  auto [u, whole] = gp_coproduct(p, {});
  CHECK(u.is_unit());
  CHECK(whole == p);
  CHECK_THROWS_AS(gp_coproduct(p, {3}), InvalidArgument);
}

TEST_CASE("coassociativity on pi_3 for every flag") {
  auto p = LabeledGP::permutahedron({1, 2, 3});
  for (int code = 0; code < 27; ++code) {
    std::vector<int> S1, S2, S12;
    for (int i = 0, c = code; i < 3; ++i, c /= 3) {
      if (c % 3 == 0) S1.push_back(i + 1);
      if (c % 3 == 1) S2.push_back(i + 1);
      if (c % 3 != 2) S12.push_back(i + 1);
    }
    auto [a, b] = gp_coproduct(p, S12);
    auto [a1, a2] = gp_coproduct(a, S1);
    auto [c, e] = gp_coproduct(p, S1);
    auto [e1, e2] = gp_coproduct(e, S2);
    CHECK(a1 == c);
    CHECK(a2 == e1);
    CHECK(b == e2);
  }
}

TEST_CASE("Euler map and antipode") {
  auto a2 = Arrangement::braid(2);
  auto x = PiElement::of(permutahedron(2));
  CHECK(euler_map(x) == PiElement::one(a2) * Rational(2) - x);
  CHECK(euler_map(PiElement::one(a2)) == PiElement::one(a2));
  CHECK(antipode_class(PiElement::one(Arrangement::braid(3))) == PiElement::one(Arrangement::braid(3)) * Rational(-1));
  auto y = PiElement::of(permutahedron(3));
  CHECK(phi(antipode_class(antipode_class(y))) == phi(y));
  auto unit = LabeledClass::of(LabeledGP());
  CHECK(antipode_class(unit).scalar == 1);
}

TEST_CASE("antipode axiom for pi_2 and a broken variant") {
  auto p = LabeledGP::permutahedron({1, 2});
  const std::vector<std::vector<int>> subsets{{}, {1}, {2}, {1, 2}};
  LabeledClass sum = LabeledClass::zero({1, 2});
  LabeledClass partial = LabeledClass::zero({1, 2});
  for (const auto& S : subsets) {
    auto [l, r] = gp_coproduct(p, S);
    auto term = class_product(antipode_class(LabeledClass::of(l)), LabeledClass::of(r));
    sum += term;
    if (!S.empty()) partial += term;
  }
  CHECK(phi_labeled(sum).empty());
  CHECK_FALSE(phi_labeled(partial).empty());
}

TEST_CASE("valuation relations vanish under the coproduct") {
  auto p = permutahedron(3);
  auto pieces = slice(p, {1, 0, 0}, Rational(2));
  const std::vector<int> I{1, 2, 3};
  const std::vector<std::pair<VPolytope, Rational>> terms{{p, 1}, {pieces.le, -1}, {pieces.ge, -1}, {pieces.eq, 1}};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> S;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1u) S.push_back(i + 1);
    TensorWeights full, broken;
    for (const auto& [q, sign] : terms) {
      auto [a, b] = gp_coproduct(LabeledGP(I, q), S);
      add_tensor(full, phi_labeled(LabeledClass::of(a)), phi_labeled(LabeledClass::of(b)), sign);
      if (sign < 0 || q.dim() > 1) add_tensor(broken, phi_labeled(LabeledClass::of(a)), phi_labeled(LabeledClass::of(b)), sign);
    }
    CHECK(full.empty());
    CHECK_FALSE(broken.empty());
  }
}

TEST_CASE("(2,1)-monoid identities on explicit simplices") {
  const std::vector<int> A{1, 2, 3}, B{4, 5};
  auto p1 = LabeledGP::simplex(A, {1, 2});
  auto p2 = LabeledGP::simplex(A, {1, 3});
  auto q = LabeledGP::simplex(B, {4, 5});
  CHECK(gp_product(gp_minkowski_sum(p1, p2), gp_minkowski_sum(q, q)) ==
        gp_minkowski_sum(gp_product(p1, q), gp_product(p2, q)));
  auto d12 = LabeledGP::simplex({1, 2}, {1, 2});
  auto point = LabeledGP::simplex({3}, {3});
  CHECK(gp_product(gp_minkowski_sum(d12, d12), gp_minkowski_sum(point, point)) ==
        gp_minkowski_sum(gp_product(d12, point), gp_product(d12, point)));
  auto s = LabeledGP::permutahedron({1, 2});
  auto sum = gp_minkowski_sum(s, s);
  auto [l, r] = gp_coproduct(sum, {2});
  auto [l1, r1] = gp_coproduct(s, {2});
  CHECK(l == gp_minkowski_sum(l1, l1));
  CHECK(r == gp_minkowski_sum(r1, r1));
}

TEST_CASE("relabeling") {
  auto p = LabeledGP::simplex({1, 2, 3}, {1, 2});
  auto q = p.relabeled({{1, 3}, {2, 1}, {3, 2}});
  CHECK(q == LabeledGP::simplex({1, 2, 3}, {3, 1}));
  CHECK_THROWS_AS(p.relabeled({{1, 2}, {2, 2}, {3, 1}}), InvalidArgument);
}

TEST_CASE("check reports") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = hopf_axiom_check(n);
    CHECK_MESSAGE(rep.pass(), rep.to_json());
  }
  auto mc = mc_coideal_check(3, 25);
  CHECK_MESSAGE(mc.pass(), mc.to_json());
  auto two = two_one_monoid_check(3);
  CHECK_MESSAGE(two.pass(), two.to_json());
  CHECK(hopf_samples(3).size() == 14);
  CHECK_THROWS_AS(hopf_axiom_check(5), ResourceLimit);
}
