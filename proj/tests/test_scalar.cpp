#include "bulkcor/scalar.hpp"

#include <random>

#include "doctest.h"

using namespace bulkcor;

TEST_CASE("cyclotomic polynomials match known tables") {
  // degree-0..: Phi_1 = x-1, Phi_2 = x+1, Phi_3 = x^2+x+1, Phi_4 = x^2+1
  auto check = [](unsigned n, std::vector<long> want) {
    const auto& p = cyclotomic_polynomial(n);
    REQUIRE(p.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(p[i] == want[i]);
  };
  check(1, {-1, 1});
  check(2, {1, 1});
  check(3, {1, 1, 1});
  check(4, {1, 0, 1});
  check(6, {1, -1, 1});
  check(8, {1, 0, 0, 0, 1});
  check(12, {1, 0, -1, 0, 1});
  CHECK(cyclotomic_degree(1) == 1);
  CHECK(cyclotomic_degree(12) == 4);
  CHECK(cyclotomic_degree(36) == 12);
}

TEST_CASE("rational arithmetic") {
  Scalar a = scalar_rational(mpq_class(1, 2));
  Scalar b = scalar_rational(mpq_class(1, 3));
  CHECK(add(a, b) == scalar_rational(mpq_class(5, 6)));
  CHECK(to_string(add(a, b)) == "5/6");
  CHECK(div(a, b) == scalar_rational(mpq_class(3, 2)));
  CHECK(parse_rational("-7/5") == mpq_class(-7, 5));
  CHECK(parse_rational("4") == mpq_class(4));
}

TEST_CASE("roots of unity relations") {
  Scalar z3 = scalar_zeta(3);
  Scalar cube = mul(mul(z3, z3), z3);
  CHECK(cube.is_one());
  // 1 + z + z^2 = 0 in Q(zeta_3)
  Scalar s = add(add(scalar_one(3), z3), mul(z3, z3));
  CHECK(s.is_zero());
  Scalar z2 = scalar_zeta(2);
  CHECK(mul(z2, z2).is_one());
  CHECK(add(z2, scalar_one(2)).is_zero());
}

TEST_CASE("embedding between cyclotomic orders") {
  CHECK(embed(scalar_rational(mpq_class(1, 2)), 3) ==
        scalar_rational(mpq_class(1, 2), 3));
  // zeta_2 lands on zeta_4^2 = -1
  Scalar e = embed(scalar_zeta(2), 4);
  CHECK(e == scalar_rational(mpq_class(-1), 4));
  // zeta_3 -> zeta_6^2, and zeta_6^2 satisfies x^2 + x + 1 = 0
  Scalar z6sq = mul(scalar_zeta(6), scalar_zeta(6));
  CHECK(embed(scalar_zeta(3), 6) == z6sq);
  Scalar t = add(add(scalar_one(6), z6sq), mul(z6sq, z6sq));
  CHECK(t.is_zero());
  // embed then project back is the identity
  Scalar back;
  REQUIRE(try_project(embed(scalar_zeta(3), 12), 3, &back));
  CHECK(back == scalar_zeta(3));
  Scalar nope;
  CHECK_FALSE(try_project(scalar_zeta(4), 2, &nope));
}

TEST_CASE("field axioms on random samples, exactly") {
  std::mt19937 rng(20260815);
  auto rnd = [&](unsigned order) {
    Scalar s = scalar_zero(order);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (auto& q : s.c) { q = mpq_class(num(rng), den(rng)); q.canonicalize(); }
    return s;
  };
  for (unsigned order : {1u, 3u, 4u, 5u, 12u}) {
    for (int it = 0; it < 25; ++it) {
      Scalar a = rnd(order), b = rnd(order), c = rnd(order);
      CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(add(a, b) == add(b, a));
      CHECK(mul(a, b) == mul(b, a));
      if (!a.is_zero()) {
        CHECK(mul(a, inv(a)).is_one());
        CHECK(div(b, a) == mul(b, inv(a)));
      }
    }
  }
}

TEST_CASE("division errors") {
  CHECK_THROWS(div(scalar_one(3), scalar_zero(3)));
  CHECK_THROWS(add(scalar_one(3), scalar_one(4)));
  CHECK_THROWS(embed(scalar_zeta(4), 6));
}
