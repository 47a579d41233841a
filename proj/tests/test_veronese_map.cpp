#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "veronese/verify.hpp"
#include "veronese/veronese_map.hpp"

using namespace veronese;
using namespace veronese::testing;

TEST_CASE("theta examples") {
  CHECK(theta(ambient("x00")) == curve("x0^2"));
  CHECK(theta(ambient("x00*x22 - x02^2")).is_zero());
  CHECK(theta(ambient("x01 + x12")) == curve("x0*x1 + x1*x2"));
  CHECK_THROWS_AS(theta(curve("x0")), RingMismatch);
}

TEST_CASE("theta is a degree-doubling ring homomorphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial g = random_poly(rng, Ring::Ambient, Field::rationals(), 3, 4);
    Polynomial h = random_poly(rng, Ring::Ambient, Field::rationals(), 3, 4);
    REQUIRE(theta(g * h) == theta(g) * theta(h));
    REQUIRE(theta(g + h) == theta(g) + theta(h));
    Polynomial hom = random_poly(rng, Ring::Ambient, Field::rationals(), 3, 4, true);
    auto image = theta(hom);
    if (!image.is_zero()) REQUIRE(image.homogeneous_degree() == 6);
  }
  for (int n = 0; n <= 4; ++n)
    for (const Monomial& m : graded_basis(Ring::Ambient, n))
      CHECK(theta(Polynomial::monomial(Ring::Ambient, Field::rationals(), m)).homogeneous_degree() == 2 * n);
}

TEST_CASE("minors") {
  MinorSet d = minors();
  CHECK(d[0] == ambient("x11*x22 - x12^2"));
  CHECK(d["01"] == ambient("x01*x22 - x12*x02"));
  CHECK(d["02"] == ambient("x01*x12 - x02*x11"));
  CHECK(d["11"] == ambient("x00*x22 - x02^2"));
  CHECK(d["12"] == ambient("x00*x12 - x02*x01"));
  CHECK(d[5] == ambient("x00*x11 - x01^2"));
  std::vector<Rational> ones(6, Rational(1));
  for (const auto& delta : d.deltas) {
    CHECK(delta.homogeneous_degree() == 2);
    CHECK(theta(delta).is_zero());
    CHECK(delta.evaluate(ones) == 0);
  }
}

TEST_CASE("veronese complex") {
  ResolutionComplex c = veronese_complex();
  REQUIRE(c.length() == 3);
  CHECK(c.d(1).entries.rows() == 1);
  CHECK(c.d(1).entries.cols() == 6);
  CHECK(c.d(2).entries.rows() == 6);
  CHECK(c.d(2).entries.cols() == 8);
  CHECK(c.d(3).entries.rows() == 8);
  CHECK(c.d(3).entries.cols() == 3);
  for (std::size_t i = 1; i <= 3; ++i) CHECK_NOTHROW(c.d(i).validate());
  CHECK(check_complex(c).pass);
  CHECK(check_minimal(c).pass);
  CHECK(betti_table(c) == BettiTable{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}});

  // every column of d_2 is a syzygy of the minors, every column of d_3 of d_2
  auto m1 = veronese_m1(), m2 = veronese_m2(), m3 = veronese_m3();
  Polynomial zero(Ring::Ambient, Field::rationals());
  auto p12 = multiply(m1, m2, zero);
  auto p23 = multiply(m2, m3, zero);
  for (std::size_t c2 = 0; c2 < 8; ++c2) CHECK(p12(0, c2).is_zero());
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c3 = 0; c3 < 3; ++c3) CHECK(p23(r, c3).is_zero());
}

TEST_CASE("veronese complex over a prime field") {
  ResolutionComplex c = veronese_complex(Field::prime(101));
  CHECK(check_complex(c).pass);
  CHECK(c.field == Field::prime(101));
}
