#include "doctest.h"
#include "fte/field.hpp"

#include <stdexcept>

using fte::PrimeField;

TEST_CASE("prime field rejects non-primes and out-of-range moduli") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2147483659u), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647u));
}

TEST_CASE("is_prime on small and large values") {
  CHECK(fte::is_prime(2));
  CHECK(fte::is_prime(3));
  CHECK_FALSE(fte::is_prime(9));
  CHECK_FALSE(fte::is_prime(1));
  CHECK(fte::is_prime(65521));
  CHECK_FALSE(fte::is_prime(65537u * 3));
  CHECK(fte::is_prime(2147483647u));
}

TEST_CASE("field arithmetic stays in canonical residues") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(3) == 4);
  CHECK(f.mul(6, 6) == 1);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.pow(3, 0) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(15) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("every nonzero residue has an inverse") {
  for (std::uint32_t p : {2u, 3u, 101u, 65521u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 2000); ++a) {
      REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("large modulus multiplication does not overflow") {
  PrimeField f(2147483647u);
  CHECK(f.mul(2147483646u, 2147483646u) == 1);
  CHECK(f.add(2147483646u, 2147483646u) == 2147483645u);
  CHECK(f.mul(f.inv(123456789u), 123456789u) == 1);
}
