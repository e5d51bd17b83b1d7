#include "doctest.h"
#include "hopflink/scalar.hpp"

using namespace hopf;

TEST_SUITE("scalar") {
  TEST_CASE("roots of unity") {
    Cyclo z = Cyclo::zeta(3);
    CHECK(z.pow(3) == Cyclo(1L));
    CHECK(Cyclo(1L) + z + z * z == Cyclo(0L));
    CHECK(z.inv() == z * z);
    CHECK(Cyclo::zeta(4).pow(2) == Cyclo(-1L));
    CHECK(Cyclo::zeta(6, 3) == Cyclo(-1L));
  }

  TEST_CASE("mixed orders promote to the lcm") {
    Cyclo s = Cyclo::zeta(4) + Cyclo::zeta(3);
    CHECK(s.order() == 12);
    CHECK(s - Cyclo::zeta(3) == Cyclo::zeta(4));
    CHECK((Cyclo::zeta(4) * Cyclo::zeta(3)).pow(12) == Cyclo(1L));
    auto back = (s - Cyclo::zeta(4)).demoted(3);
    REQUIRE(back);
    CHECK(*back == Cyclo::zeta(3));
    CHECK_FALSE(Cyclo::zeta(4).demoted(3));
  }

  TEST_CASE("rationals") {
    Cyclo a = Cyclo::parse_rational("-3/4");
    CHECK(a.is_rational());
    CHECK(a.to_rational() == Rational(-3, 4));
    CHECK(a * Cyclo::parse_rational("4/3") == Cyclo(-1L));
    CHECK(Cyclo(Rational(2, 6)).to_string() == "1/3");
    CHECK_THROWS_AS(Cyclo(0L).inv(), DivisionByZero);
  }

  TEST_CASE("trace") {
    CHECK(Cyclo::zeta(3).trace() == Rational(-1));
    CHECK(Cyclo(2L).trace(4) == Rational(4));
    CHECK(Cyclo::zeta(5).trace() == Rational(-1));
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(12) == 4);
    const auto& p = cyclotomic_polynomial(6);  // x^2 - x + 1
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 1);
    CHECK(p[1] == -1);
    CHECK(p[2] == 1);
  }

  TEST_CASE("polynomial roots") {
    Poly x2p1 = {Cyclo(1L), Cyclo(0L), Cyclo(1L)};
    auto over_q = minimal_polynomial_roots(x2p1, 1);
    CHECK(over_q.roots.empty());
    CHECK(poly::degree(over_q.remainder) == 2);
    auto over_i = minimal_polynomial_roots(x2p1, 4);
    REQUIRE(over_i.roots.size() == 2);
    for (const auto& r : over_i.roots) CHECK(poly::eval(x2p1, r).is_zero());
    CHECK(poly::degree(over_i.remainder) == 0);

    // (x - 1)^2 (x + 2) keeps multiplicity
    Poly p = poly::mul(poly::mul({Cyclo(-1L), Cyclo(1L)}, {Cyclo(-1L), Cyclo(1L)}),
                       {Cyclo(2L), Cyclo(1L)});
    auto r = minimal_polynomial_roots(p, 1);
    CHECK(r.roots.size() == 3);
    CHECK(std::count(r.roots.begin(), r.roots.end(), Cyclo(1L)) == 2);
  }

  TEST_CASE("polynomial division") {
    Poly a = {Cyclo(-1L), Cyclo(0L), Cyclo(1L)};
    Poly b = {Cyclo(-1L), Cyclo(1L)};
    auto [q, rem] = poly::divmod(a, b);
    CHECK(q == Poly{Cyclo(1L), Cyclo(1L)});
    CHECK(rem.empty());
    CHECK(poly::gcd(a, poly::mul(b, b)) == b);
    CHECK_THROWS_AS(poly::divmod(a, Poly{}), DivisionByZero);
  }
}
