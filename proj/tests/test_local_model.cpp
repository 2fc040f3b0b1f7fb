#include "doctest.h"
#include "mm/error.hpp"
#include "mm/local_model.hpp"
#include "support.hpp"

using namespace mm;
using mmtest::ideal;

TEST_CASE("m-primary test") {
  auto r = mmtest::ring({"x", "y"});
  auto A = LocalRingModel::regular(r);
  CHECK(is_m_primary(A, ideal(r, {"x", "y"})));
  CHECK_FALSE(is_m_primary(A, ideal(r, {"x"})));
  CHECK(is_m_primary(A, ideal(r, {"x^2", "y^3"})));
  CHECK(is_m_primary(LocalRingModel(ideal(r, {"x"})), ideal(r, {"y^2"})));
  CHECK_THROWS_AS(is_m_primary(A, ideal(r, {"x+y^2"})), Error);
}

TEST_CASE("model validation") {
  auto r = mmtest::ring({"x", "y"});
  CHECK_THROWS_AS(LocalRingModel(Ideal::unit(r)), Error);
  CHECK_THROWS_AS(LocalRingModel(ideal(r, {"x - y^2"})), Error);
  CHECK(LocalRingModel(ideal(r, {"x*y"})).dim() == 1);
}

TEST_CASE("length examples") {
  auto r = mmtest::ring({"x", "y"});
  auto A = LocalRingModel::regular(r);
  auto m = ideal(r, {"x", "y"});
  CHECK(length_quotient(A, m, m) == 2);
  auto U = ideal_combine(m, ideal(r, {"x^2", "y^3"}), CombineOp::kProduct);
  CHECK(length_quotient(A, U, m) == 4);
  CHECK(length_quotient(A, U, m, Path::kGroebner) == 4);
  for (int n0 = 0; n0 <= 6; ++n0) {
    CHECK(length_quotient(A, ideal_power(m, n0), m) == n0 + 1);
    CHECK(length_quotient(A, ideal_power(m, n0), m, Path::kGroebner) == n0 + 1);
  }
  CHECK_THROWS_AS(length_quotient(A, m, ideal(r, {"x"})), Error);
}

TEST_CASE("length on a weighted ring with a non-monomial gamma") {
  auto r = mmtest::ring({"x", "y"}, {3, 2});
  auto A = LocalRingModel(ideal(r, {"x^2 + 7*y^3"}));
  auto m = ideal(r, {"x", "y"});
  // k[x,y]/(f) with ord f = 2: m^n/m^{n+1} has length 2 for n >= 1.
  for (int n = 1; n <= 5; ++n) CHECK(length_quotient(A, ideal_power(m, n), m) == 2);
  CHECK(length_quotient(A, m, m) == 2);
  CHECK(length_quotient(A, Ideal::unit(r), m) == 1);
}

TEST_CASE("cutoff soundness") {
  auto r = mmtest::ring({"x", "y", "z"});
  auto A = LocalRingModel(ideal(r, {"x*y - z^2"}));
  auto J = ideal(r, {"x^2", "y", "z^3"});
  LengthCalculator calc(A, J);
  std::vector<Ideal> us{ideal(r, {"x", "z"}), ideal(r, {"x^2", "y*z"}), ideal_power(ideal(r, {"x", "y", "z"}), 3)};
  for (const auto& U : us) {
    auto v = calc.length(U, Path::kGroebner);
    CHECK(v == calc.length(U, Path::kGroebner, 3));
    CHECK(v == calc.length(U, Path::kGroebner, 10));
  }
}

TEST_CASE("additivity against colengths") {
  auto r = mmtest::ring({"x", "y"});
  auto A = LocalRingModel::regular(r);
  auto J = ideal(r, {"x^2", "y"});
  std::vector<Ideal> us{ideal(r, {"x^3", "x*y", "y^2"}), ideal(r, {"x", "y^4"}), ideal(r, {"x^2", "y^2"})};
  for (const auto& U : us) {
    auto JU = ideal_combine(J, U, CombineOp::kProduct);
    auto direct = length_quotient(A, U, J);
    CHECK(direct == colength(LocalRingModel(JU)) - colength(LocalRingModel(U)));
    CHECK(direct == length_quotient(A, U, J, Path::kGroebner));
  }
}

TEST_CASE("hilbert samuel examples") {
  auto r = mmtest::ring({"x", "y"});
  auto A = LocalRingModel::regular(r);
  auto m = ideal(r, {"x", "y"});
  auto zero = Ideal(r);
  auto e1 = hilbert_samuel(A, m, zero);
  CHECK(e1.dim == 2);
  CHECK(e1.mult == 1);
  auto e6 = hilbert_samuel(A, ideal(r, {"x^2", "y^3"}), zero);
  CHECK(e6.dim == 2);
  CHECK(e6.mult == 6);
  auto eh = hilbert_samuel(A, m, ideal(r, {"x"}));
  CHECK(eh.dim == 1);
  CHECK(eh.mult == 1);
  CHECK(hilbert_samuel(A, ideal(r, {"x^2", "y"}), zero).mult == 2);
  // zero-dimensional quotient: the colength
  CHECK(hilbert_samuel(A, m, ideal(r, {"x^2", "y^3"})).mult == 6);
}

TEST_CASE("hilbert samuel does not depend on the generators of J") {
  auto r = mmtest::ring({"x", "y", "z"});
  auto A = LocalRingModel(ideal(r, {"x*y - z^2"}));
  auto J1 = ideal(r, {"x", "y", "z"});
  auto J2 = ideal(r, {"x + y", "y", "z - x", "x + z"});
  CHECK(hilbert_samuel(A, J1, Ideal(r)).mult == hilbert_samuel(A, J2, Ideal(r)).mult);
  CHECK(hilbert_samuel(A, J1, Ideal(r)).mult == 2);
}

TEST_CASE("regular models have multiplicity one") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("y" + std::to_string(i + 1));
    auto r = mmtest::ring(names);
    std::vector<Polynomial> vars;
    for (int i = 0; i < d; ++i) vars.push_back(Polynomial::variable(r, i));
    auto res = hilbert_samuel(LocalRingModel::regular(r), Ideal(r, vars), Ideal(r));
    CHECK(res.dim == d);
    CHECK(res.mult == 1);
  }
}
