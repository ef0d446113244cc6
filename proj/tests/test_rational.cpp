#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <random>

#include "cei/errors.hpp"
#include "cei/rational.hpp"

using cei::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(12).str() == "12/1");
  CHECK_THROWS_AS(Rational(1, 0), cei::InvalidArgument);
}

TEST_CASE("rational arithmetic and exact ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) - Rational(1, 3) == Rational(1, 3));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(8, 3) < Rational(4));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(11, 2) > Rational(27, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), cei::InvalidArgument);
}

TEST_CASE("rational decimal rendering truncates") {
  CHECK(Rational(8, 3).decimal(4) == "2.6666");
  CHECK(Rational(-1, 8).decimal(3) == "-0.125");
  CHECK(Rational(20).decimal(2) == "20.00");
  CHECK(Rational(11, 2).decimal(0) == "5");
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("8/3") == Rational(8, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("3/"), cei::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), cei::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), cei::ParseError);
}

TEST_CASE("overflowing results promote to wide values and demote back") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational a(1, big);
  Rational b(1, big - 1);
  Rational sum = a + b;
  CHECK(sum.is_wide());
  CHECK_FALSE(sum.as_int64().has_value());
  Rational back = sum - b;
  CHECK_FALSE(back.is_wide());
  CHECK(back == a);
  CHECK(sum > a);
  CHECK(sum > b);

  Rational huge = Rational(big) * Rational(big);
  CHECK(huge.is_wide());
  CHECK(huge.numerator_string() == "85070591730234615847396907784232501249");
  CHECK((huge / Rational(big)) == Rational(big));
  CHECK(Rational(std::numeric_limits<std::int64_t>::min(), -1).is_wide());
}

TEST_CASE("wide arithmetic agrees with boost rationals on random sums") {
  using Q = boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-(std::int64_t{1} << 60), std::int64_t{1} << 60);
  std::uniform_int_distribution<std::int64_t> den(1, std::int64_t{1} << 61);
  for (int trial = 0; trial < 200; ++trial) {
    Rational acc;
    Q ref = 0;
    for (int i = 0; i < 6; ++i) {
      std::int64_t p = num(rng), q = den(rng);
      acc += Rational(p, q);
      ref += Q(p, q);
    }
    CHECK(acc.numerator_string() == boost::multiprecision::numerator(ref).str());
    CHECK(acc.denominator_string() == boost::multiprecision::denominator(ref).str());
  }
}
