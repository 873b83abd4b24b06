#include "doctest.h"

#include "gpw/error.hpp"
#include "gpw/multipoly.hpp"
#include "gpw/rational.hpp"

#include <numeric>
#include <random>

using namespace gpw;

namespace {

// Plain machine-integer fractions used as the reference.
struct Frac {
  long long n, d;
};

Frac norm(long long n, long long d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0)
    g = 1;
  return {n / g, d / g};
}

bool same(const Rational &r, Frac f) {
  return r.numerator() == static_cast<long>(f.n) &&
         r.denominator() == static_cast<long>(f.d);
}

} // namespace

TEST_CASE("rational arithmetic agrees with machine fractions") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int t = 0; t < 2000; ++t) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    CHECK(same(x + y, norm(a * d + c * b, b * d)));
    CHECK(same(x - y, norm(a * d - c * b, b * d)));
    CHECK(same(x * y, norm(a * c, b * d)));
    CHECK(same(rat_add(x, y), norm(a * d + c * b, b * d)));
    CHECK(same(rat_mul(x, y), norm(a * c, b * d)));
    CHECK(same(rat_neg(x), norm(-a, b)));
    if (c != 0) {
      CHECK(same(x / y, norm(a * d, b * c)));
      CHECK(same(rat_inv(y), norm(d, c)));
    }
    CHECK(((x < y) == (a * d < c * b)));
  }
}

TEST_CASE("rationals are stored in lowest terms") {
  Rational r(6, -4);
  CHECK(to_string(r) == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(rat_inv(Rational(0)), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("rational parse and print") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(to_string(parse_rational("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 999);
  for (int t = 0; t < 200; ++t) {
    Rational r(num(rng), den(rng));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("large values stay exact") {
  Rational big(1);
  for (int i = 0; i < 40; ++i)
    big *= Rational(1000003);
  Rational back = big;
  for (int i = 0; i < 40; ++i)
    back /= Rational(1000003);
  CHECK(back == Rational(1));
}

TEST_CASE("multipoly ring laws on random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), var(0, 2), exps(0, 2);
  auto random_poly = [&] {
    MultiPoly p;
    for (int t = 0; t < 4; ++t) {
      MultiPoly m(Rational(coef(rng)));
      for (int k = 0; k < exps(rng); ++k)
        m *= MultiPoly::variable(static_cast<std::size_t>(var(rng)));
      p += m;
    }
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    auto p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
    CHECK(poly_add(p, -p).is_zero());
    CHECK(poly_mul(p, MultiPoly(1)) == p);
    CHECK(poly_is_zero(poly_mul(p, MultiPoly(0))));
  }
}

TEST_CASE("multipoly canonical form") {
  auto t0 = MultiPoly::variable(0), t1 = MultiPoly::variable(1);
  auto p = (t0 + t1) * (t0 - t1);
  CHECK(p == t0 * t0 - t1 * t1);
  CHECK(p.term_count() == 2);
  MultiPoly z = t1 * MultiPoly(0);
  CHECK(z.is_zero());
  MultiPoly c;
  c.add_term({0, 0, 0}, Rational(2));
  CHECK(c == MultiPoly(2));
}
