#include <catch2/catch_amalgamated.hpp>

#include <braidforge/scalars.hpp>

using namespace braidforge::exact;
using braidforge::Error;
using braidforge::OverflowError;

TEST_CASE("rationals normalize and compare numerically") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(1, -2) == Rational(-1, 2));
  REQUIRE(Rational(0, 7) == Rational(0));
  REQUIRE(Rational(1, 3) < Rational(1, 2));
  REQUIRE(Rational(-1) < Rational(-1, 2));
  REQUIRE_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  REQUIRE(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  REQUIRE(Rational(1, 2) / Rational(1, 4) == Rational(2));
  REQUIRE((-Rational(1, 2)).sign() == -1);
  REQUIRE(Rational(0).is_zero());
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), Error);
  REQUIRE(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("rational overflow raises the dedicated error") {
  Rational big(INT64_MAX / 2, 1);
  REQUIRE_THROWS_AS(big * big, OverflowError);
  // still catchable as the base domain error
  REQUIRE_THROWS_AS(big * big, Error);
}

TEST_CASE("rational cosine table covers orders 2, 3 and the infinite bond") {
  REQUIRE(*Rational::minus_cos_pi_over(-1) == Rational(-1));
  REQUIRE(*Rational::minus_cos_pi_over(2) == Rational(0));
  REQUIRE(*Rational::minus_cos_pi_over(3) == Rational(-1, 2));
  REQUIRE_FALSE(Rational::minus_cos_pi_over(4).has_value());
  REQUIRE_FALSE(Rational::minus_cos_pi_over(7).has_value());
}

static Quad root_of(int radicand) {
  int mask = 0;
  if (radicand % 2 == 0) mask |= 1;
  if (radicand % 3 == 0) mask |= 2;
  if (radicand % 5 == 0) mask |= 4;
  return Quad::basis(mask, Rational(1));
}

TEST_CASE("quadratic field multiplication follows the radical rules") {
  Quad r2 = root_of(2), r3 = root_of(3), r5 = root_of(5);
  REQUIRE(r2 * r2 == Quad(2));
  REQUIRE(r3 * r3 == Quad(3));
  REQUIRE(r2 * r3 == root_of(6));
  REQUIRE(r2 * r3 * r5 == root_of(30));
  REQUIRE(root_of(6) * root_of(10) == Quad(2) * root_of(15));
  REQUIRE((r2 + r3) * (r2 - r3) == Quad(-1));
}

TEST_CASE("quadratic field division inverts exactly") {
  Quad r2 = root_of(2), r3 = root_of(3);
  Quad x = r2 + r3 + Quad(Rational(1, 2));
  REQUIRE(x / x == Quad(1));
  REQUIRE(Quad(1) / r2 * r2 == Quad(1));
  Quad y = Quad(7) - root_of(30);
  REQUIRE((x / y) * y == x);
  REQUIRE_THROWS_AS(x / Quad(0), Error);
}

TEST_CASE("quadratic sign decisions are exact even for near ties") {
  Quad r2 = root_of(2), r3 = root_of(3), r10 = root_of(10);
  // 1.4142 + 1.7320 = 3.1462... vs 3.1622...
  REQUIRE((r2 + r3 - r10).sign() == -1);
  REQUIRE((r10 - r2 - r3).sign() == 1);
  REQUIRE((r2 * r3 - root_of(6)).sign() == 0);
  REQUIRE((r2 + r3 - r10).is_zero() == false);
  // 3 sqrt3 = 5.196... vs 2 sqrt2 + sqrt5 = 5.064...
  REQUIRE((Quad(3) * r3 - Quad(2) * r2 - root_of(5)).sign() == 1);
}

TEST_CASE("quadratic cosine table extends to orders 4, 5, 6") {
  Quad c4 = *Quad::minus_cos_pi_over(4);
  REQUIRE(c4 * c4 == Quad(Rational(1, 2)));
  REQUIRE(c4.sign() == -1);
  Quad c5 = *Quad::minus_cos_pi_over(5);
  // 4 cos^2(pi/5) - 2 cos(pi/5) = 1
  REQUIRE(Quad(4) * c5 * c5 + Quad(2) * c5 == Quad(1));
  Quad c6 = *Quad::minus_cos_pi_over(6);
  REQUIRE(c6 * c6 == Quad(Rational(3, 4)));
  REQUIRE(*Quad::minus_cos_pi_over(3) == Quad(Rational(-1, 2)));
  REQUIRE_FALSE(Quad::minus_cos_pi_over(7).has_value());
}

TEST_CASE("quadratic printing names the radicands") {
  REQUIRE(Quad(0).to_string() == "0");
  REQUIRE((Quad(1) + root_of(2)).to_string() == "1+1r2");
  REQUIRE((-root_of(15)).to_string() == "-1r15");
}

TEST_CASE("float scalars compare through a tolerance") {
  Approx a(1.0), b(1.0 + 1e-12);
  REQUIRE(a == b);
  REQUIRE(Approx(0.0).is_zero());
  REQUIRE(Approx(1e-12).sign() == 0);
  REQUIRE(Approx(1e-6).sign() == 1);
  REQUIRE(Approx(-2.0).sign() == -1);
  REQUIRE((Approx(2.0) * Approx(3.0)).to_double() == Catch::Approx(6.0));
  REQUIRE_THROWS_AS(Approx(1.0) / Approx(0.0), Error);
  REQUIRE(Approx(*Approx::minus_cos_pi_over(7)).to_double() ==
          Catch::Approx(-std::cos(M_PI / 7)));
}

TEST_CASE("scalar modes advertise their names") {
  REQUIRE(std::string(Rational::mode_name()) == "rational");
  REQUIRE(std::string(Quad::mode_name()) == "quadratic");
  REQUIRE(std::string(Approx::mode_name()) == "float");
}
