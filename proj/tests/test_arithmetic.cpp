#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <string>

#include "ldp/bigint.hpp"
#include "ldp/rational.hpp"
#include "test_util.hpp"

using ldp::BigInt;
using ldp::Rational;

namespace {

BigInt from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  BigInt res(0);
  const BigInt base(1LL << 32);
  for (int shift = 96; shift >= 0; shift -= 32)
    res = res * base +
          BigInt(static_cast<long long>((u >> shift) & 0xffffffffULL));
  return neg ? -res : res;
}

}  // namespace

TEST_CASE("int64 round trips") {
  for (long long v : {0LL, 1LL, -1LL, 42LL, -12345678901234LL, LLONG_MAX,
                      LLONG_MIN, LLONG_MIN + 1}) {
    BigInt b(v);
    CHECK(b.fits_int64());
    CHECK(b.to_int64() == v);
    CHECK(b.to_string() == std::to_string(v));
    CHECK(BigInt::from_string(std::to_string(v)) == b);
  }
}

TEST_CASE("string round trips beyond 64 bits") {
  const std::string digits =
      "123456789012345678901234567890123456789012345678901234567890";
  BigInt b = BigInt::from_string(digits);
  CHECK(b.to_string() == digits);
  CHECK(BigInt::from_string("-" + digits).to_string() == "-" + digits);
  CHECK(!b.fits_int64());
  CHECK_THROWS_AS(BigInt::from_string("12x4"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
}

TEST_CASE("multiplication agrees with __int128") {
  Rng rng(1);
  for (int it = 0; it < 20000; ++it) {
    long long x = rng.range(-3000000000LL, 3000000000LL);
    long long y = rng.range(-3000000000LL, 3000000000LL);
    __int128 p = static_cast<__int128>(x) * y;
    CHECK(BigInt(x) * BigInt(y) == from_i128(p));
  }
}

TEST_CASE("divmod: trunc semantics against known decompositions") {
  Rng rng(2);
  for (int it = 0; it < 20000; ++it) {
    // a = q*b + r with |r| < |b| and sign(r) in {0, sign(a)}
    long long q = rng.range(-2000000000LL, 2000000000LL);
    long long b = rng.range(1, 3000000000LL) * (rng.range(0, 1) ? 1 : -1);
    long long r = rng.range(0, std::abs(b) - 1);
    __int128 a128 = static_cast<__int128>(q) * b;
    if (a128 > 0 || (a128 == 0 && q == 0))
      a128 += r;
    else
      a128 -= r;
    // recompute the expected trunc quotient/remainder in 128 bits
    __int128 eq = a128 / b, er = a128 % b;
    BigInt Q, R;
    BigInt::divmod(from_i128(a128), BigInt(b), Q, R);
    CHECK(Q == from_i128(eq));
    CHECK(R == from_i128(er));
  }
}

TEST_CASE("algebraic identities on multi-limb values") {
  Rng rng(3);
  for (int it = 0; it < 2000; ++it) {
    BigInt a = BigInt(static_cast<long long>(rng.next() >> 1)) *
               BigInt(static_cast<long long>(rng.next() >> 1)) *
               BigInt(rng.range(-1000000, 1000000));
    BigInt b = BigInt(static_cast<long long>(rng.next() >> 1)) *
               BigInt(rng.range(1, 1000000));
    if (rng.range(0, 1)) b = -b;
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    BigInt q = a / b, r = a % b;
    CHECK(q * b + r == a);
    CHECK(abs(r) < abs(b));
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("gcd matches std::gcd on machine integers") {
  Rng rng(4);
  for (int it = 0; it < 5000; ++it) {
    long long x = rng.range(-1000000000LL, 1000000000LL);
    long long y = rng.range(-1000000000LL, 1000000000LL);
    CHECK(gcd(BigInt(x), BigInt(y)).to_int64() == std::gcd(x, y));
  }
  CHECK(gcd(BigInt(0), BigInt(0)) == BigInt(0));
  CHECK(gcd(BigInt(0), BigInt(-7)) == BigInt(7));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(0, 17) == Rational(0));
  CHECK(Rational(0).den() == BigInt(1));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-5") == Rational(-5));
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 7) * Rational(14, 9) == Rational(2, 3));
  CHECK(Rational(5, 8) / Rational(15, 4) == Rational(1, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  // the k=1 flagged sum of the series chain, exactly
  CHECK(Rational(1, 2) + Rational(2, 5) + Rational(1, 3) == Rational(37, 30));
}

TEST_CASE("rational field laws on random values") {
  Rng rng(5);
  for (int it = 0; it < 3000; ++it) {
    Rational a(rng.range(-500, 500), rng.range(1, 90));
    Rational b(rng.range(-500, 500), rng.range(1, 90));
    Rational c(rng.range(-500, 500), rng.range(1, 90));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
