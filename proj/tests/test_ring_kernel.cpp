#include <algorithm>
#include <set>

#include "doctest.h"
#include "mm/error.hpp"
#include "mm/random.hpp"
#include "support.hpp"

using namespace mm;
using mmtest::poly;

namespace {

Monomial mono(std::initializer_list<int> e) {
  std::vector<int> v(e);
  return make_monomial(v);
}

Monomial random_monomial(SplitMix64& rng, int n) {
  Monomial m;
  for (int i = 0; i < n; ++i) m.exp[i] = static_cast<std::uint16_t>(rng.below(5));
  return m;
}

}  // namespace

TEST_CASE("field inverse and reduction") {
  PrimeField f;
  CHECK(f.characteristic() == 32003);
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Coeff a = static_cast<Coeff>(rng.below(32003));
    Coeff b = static_cast<Coeff>(1 + rng.below(32002));
    CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
    CHECK(f.mul(b, f.inv(b)) == 1);
  }
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_symmetric(32002) == -1);
  CHECK_THROWS_AS(PrimeField(32004), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("compare under grevlex and lex") {
  auto r = mmtest::ring({"x", "y"});
  CHECK(r->compare(mono({2, 1}), mono({1, 2})) == std::strong_ordering::greater);
  CHECK(r->compare(mono({1, 1}), mono({1, 1})) == std::strong_ordering::equal);
  auto lex = r->with_order(MonomialOrder::lex());
  CHECK(lex->compare(mono({1, 0}), mono({0, 3})) == std::strong_ordering::greater);
  CHECK(r->compare(mono({1, 0}), mono({0, 3})) == std::strong_ordering::less);

  std::vector<int> a{1, 2}, b{1, 2, 3};
  CHECK_THROWS_AS(compare_exponents(*r, a, b), Error);
  CHECK(compare_exponents(*r, a, a) == std::strong_ordering::equal);
}

TEST_CASE("order axioms on random monomials") {
  std::vector<RingPtr> rings{
      mmtest::ring({"a", "b", "c"}),
      mmtest::ring({"a", "b", "c"})->with_order(MonomialOrder::lex()),
      mmtest::ring({"a", "b", "c"}, {3, 1, 2}),
      mmtest::ring({"a", "b", "c"})->with_elimination_variable(),
  };
  SplitMix64 rng(5);
  for (const auto& r : rings) {
    const int n = r->nvars();
    for (int it = 0; it < 400; ++it) {
      Monomial a = random_monomial(rng, n), b = random_monomial(rng, n), c = random_monomial(rng, n);
      CHECK(r->compare(Monomial{}, a) != std::strong_ordering::greater);
      auto ab = r->compare(a, b);
      CHECK(r->compare(b, a) == (0 <=> ab));
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      CHECK(r->compare(a * c, b * c) == ab);
      if (ab == std::strong_ordering::less && r->compare(b, c) == std::strong_ordering::less)
        CHECK(r->compare(a, c) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("elimination order puts the eliminated variable on top") {
  auto r = mmtest::ring({"x", "y"})->with_elimination_variable();
  CHECK(r->names().front() == "_w");
  CHECK(r->compare(mono({1, 0, 0}), mono({0, 9, 9})) == std::strong_ordering::greater);
  CHECK(r->compare(mono({1, 0, 0}), mono({1, 0, 1})) == std::strong_ordering::less);
}

TEST_CASE("polynomial arithmetic") {
  auto r = mmtest::ring({"x", "y"});
  auto f = poly(r, "x+y"), g = poly(r, "x-y");
  CHECK(poly_arith(f, g, ArithOp::kMul) == poly(r, "x^2-y^2"));
  CHECK(f + Polynomial(r) == f);
  CHECK((f - f).is_zero());
  CHECK(poly_arith(f, f, ArithOp::kScale, 3) == poly(r, "3*x+3*y"));

  auto r7 = mmtest::ring({"x", "y"}, {}, 7);
  CHECK(poly(r7, "x") * poly(r7, "x+y") == poly(r7, "x^2+x*y"));
  CHECK(poly(r7, "7*x + y") == poly(r7, "y"));

  auto h = poly(r, "x^2+x*y") * poly(r, "y^3");
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 5);

  auto other = mmtest::ring({"x", "y"}, {}, 7);
  CHECK_THROWS_AS(f + poly(other, "x"), Error);
}

TEST_CASE("polynomial text round trip") {
  auto r = mmtest::ring({"x", "y"});
  auto f = poly(r, "3*x^2*y - y^3");
  CHECK(f.to_string() == "3*x^2*y - y^3");
  CHECK(poly(r, f.to_string()) == f);
  CHECK(poly(r, "-2 + x").to_string() == "x - 2");
  CHECK(poly(r, "0").is_zero());
  CHECK_THROWS_AS(poly(r, "x + z"), SyntaxError);
  CHECK_THROWS_AS(poly(r, "x $ y"), SyntaxError);
}

TEST_CASE("weighted homogeneity") {
  auto r = mmtest::ring({"x", "y"}, {3, 2});
  CHECK(poly(r, "x^2 + 5*y^3").is_homogeneous());
  CHECK(poly(r, "x^2 + 5*y^3").degree() == 6);
  CHECK_FALSE(poly(r, "x + y").is_homogeneous());
  CHECK_FALSE(poly(mmtest::ring({"x", "y"}), "x^2 + y^3").is_homogeneous());
}

TEST_CASE("random homogeneous combinations") {
  auto r = mmtest::ring({"x", "y"});
  std::vector<Polynomial> g1{poly(r, "x^2"), poly(r, "y^3")};
  auto c = random_homogeneous_combo(g1, 2, 99);
  REQUIRE(c.size() == 1);
  CHECK(c.lead_monomial() == mono({2, 0}));
  CHECK(c.lead().coeff != 0);
  CHECK_THROWS_AS(random_homogeneous_combo(g1, 5, 99), Error);

  std::vector<Polynomial> g2{poly(r, "x^2"), poly(r, "x*y"), poly(r, "y^2")};
  auto a = random_homogeneous_combo(g2, 2, 1234);
  CHECK(a == random_homogeneous_combo(g2, 2, 1234));
  CHECK(a.size() == 3);
  CHECK(a.is_homogeneous());
  CHECK(a.degree() == 2);
  CHECK_FALSE(a == random_homogeneous_combo(g2, 2, 1235));
}
