#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "veronese/lift.hpp"
#include "veronese/random_curve.hpp"
#include "veronese/veronese_map.hpp"

using namespace veronese;
using namespace veronese::testing;

namespace {

const Field kP = Field::prime(Field::kDefaultPrime);

Polynomial x(std::size_t n, Field field = Field::rationals()) { return Polynomial::variable(Ring::Curve, field, n); }

}  // namespace

TEST_CASE("parity_split examples") {
  auto even = parity_split(curve("x0^2 + x0*x1 + x1*x2"), Parity::Even);
  CHECK(even[0] == curve("x0^2"));
  CHECK(even[1] == curve("x1*x2"));
  CHECK(even[2].is_zero());
  CHECK(even[3] == curve("x0*x1"));

  auto odd = parity_split(curve("x0*x1*x2"), Parity::Odd);
  CHECK(odd[0] == curve("x0*x1*x2"));
  CHECK(odd[1].is_zero());
  CHECK(odd[2].is_zero());
  CHECK(odd[3].is_zero());

  auto odd2 = parity_split(curve("x0^3 + x0^2*x1 + x1^2*x2 + x0*x1*x2"), Parity::Odd);
  CHECK(odd2[1] == curve("x0^3"));
  CHECK(odd2[2] == curve("x0^2*x1"));
  CHECK(odd2[3] == curve("x1^2*x2"));

  CHECK_THROWS_AS(parity_split(curve("x0^2 + x1"), Parity::Even), PreconditionError);
  CHECK_THROWS_AS(parity_split(curve("x0^3"), Parity::Even), PreconditionError);
}

TEST_CASE("parity parts partition f") {
  for (int d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Polynomial f = random_curve(d, seed);
      auto parts = parity_split(f, parity_of(d));
      CHECK(parts[0] + parts[1] + parts[2] + parts[3] == f);
      std::size_t total = 0;
      for (const auto& p : parts.parts) total += p.size();
      CHECK(total == f.size());
    }
  }
}

TEST_CASE("lift_even examples") {
  CHECK(lift_even(curve("x0^2")).F == ambient("x00"));
  CHECK(lift_even(curve("x1*x2")).F == ambient("x12"));
  CHECK(lift_even(curve("x0^4 + x1^2*x2^2 + x0*x1*x2^2")).F == ambient("x00^2 + x11*x22 + x01*x22"));
  CHECK_THROWS_AS(lift_even(curve("x0^3")), PreconditionError);
  CHECK_THROWS_AS(lift_even(curve("x0^2 + x1")), PreconditionError);
  CHECK_THROWS_AS(lift_even(Polynomial(Ring::Curve, Field::rationals())), PreconditionError);
}

TEST_CASE("lift_odd examples") {
  OddLift a = lift_odd(curve("x0*x1*x2"));
  CHECK(a.h[0] == ambient("1"));
  CHECK(a.h[1].is_zero());
  CHECK(a.h[2].is_zero());
  CHECK(a.h[3].is_zero());
  CHECK(a.F[0] == ambient("x00*x12"));
  CHECK(a.F[1] == ambient("x11*x02"));
  CHECK(a.F[2] == ambient("x22*x01"));

  OddLift b = lift_odd(curve("x0^3"));
  CHECK(b.h[1] == ambient("x00"));
  CHECK(b.F[0] == ambient("x00^2"));
  CHECK(b.F[1] == ambient("x00*x01"));
  CHECK(b.F[2] == ambient("x00*x02"));

  OddLift c = lift_odd(curve("x2^3"));
  CHECK(c.h[3] == ambient("x22"));
  CHECK(c.F[0] == ambient("x02*x22"));
  CHECK(c.F[1] == ambient("x12*x22"));
  CHECK(c.F[2] == ambient("x22^2"));

  CHECK_THROWS_AS(lift_odd(curve("x0^2")), PreconditionError);
  CHECK_THROWS_AS(lift_odd(curve("x0")), PreconditionError);
}

TEST_CASE("lift round trips and degrees") {
  for (Field field : {Field::rationals(), kP}) {
    for (int d = 2; d <= 8; ++d) {
      const int m = d % 2 == 0 ? d / 2 : (d + 1) / 2;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Polynomial f = random_curve(d, 1000 * d + seed, field);
        if (d % 2 == 0) {
          EvenLift lift = lift_even(f);
          REQUIRE(theta(lift.F) == f);
          REQUIRE(lift.F.homogeneous_degree() == m);
        } else {
          OddLift lift = lift_odd(f);
          auto parts = parity_split(f, Parity::Odd);
          for (std::size_t n = 0; n < 3; ++n) {
            REQUIRE(theta(lift.F[n]) == x(n, field) * f);
            REQUIRE(lift.F[n].homogeneous_degree() == m);
          }
          if (!parts[0].is_zero()) REQUIRE(lift.h[0].homogeneous_degree() == m - 2);
          for (std::size_t k = 1; k < 4; ++k)
            if (!parts[k].is_zero()) REQUIRE(lift.h[k].homogeneous_degree() == m - 1);
        }
      }
    }
  }
}

TEST_CASE("lift_even is linear") {
  for (int d : {2, 4, 6}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Polynomial f = random_curve(d, seed), g = random_curve(d, seed + 500);
      if ((f + g).is_zero()) continue;
      CHECK(lift_even(f + g).F == lift_even(f).F + lift_even(g).F);
    }
  }
}

TEST_CASE("odd lift assembles F_n from the h parts") {
  Polynomial f = random_curve(5, 42);
  OddLift lift = lift_odd(f);
  const auto& h = lift.h;
  CHECK(lift.F[0] == ambient("x00*x12") * h[0] + ambient("x00") * h[1] + ambient("x01") * h[2] + ambient("x02") * h[3]);
  CHECK(lift.F[1] == ambient("x11*x02") * h[0] + ambient("x01") * h[1] + ambient("x11") * h[2] + ambient("x12") * h[3]);
  CHECK(lift.F[2] == ambient("x22*x01") * h[0] + ambient("x02") * h[1] + ambient("x12") * h[2] + ambient("x22") * h[3]);
}

TEST_CASE("lifts are defined in characteristic 2") {
  const Field f2 = Field::prime(2);
  Polynomial f = curve("x0^4 + x1^3*x2 + x0*x1*x2^2", f2);
  CHECK(theta(lift_even(f).F) == f);
  Polynomial g = curve("x0^3 + x0*x1*x2 + x2^3", f2);
  for (std::size_t n = 0; n < 3; ++n) CHECK(theta(lift_odd(g).F[n]) == x(n, f2) * g);
}

TEST_CASE("random_curve") {
  CHECK(random_curve(4, 1) == random_curve(4, 1));
  CHECK_FALSE(random_curve(4, 1) == random_curve(4, 2));
  Polynomial f = random_curve(3, 7);
  CHECK(f.homogeneous_degree() == 3);
  CHECK(f.size() <= 10);
  for (std::size_t v = 0; v < 3; ++v) {
    Monomial m;
    m.exps[v] = 3;
    CHECK(f.coefficient(m) != 0);
  }
  CHECK_THROWS_AS(random_curve(1, 0), PreconditionError);
}
