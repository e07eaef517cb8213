#include "doctest.h"
#include "support.hpp"

#include <random>

using namespace fte;
using namespace fte::testing;

TEST_CASE("parsing reduces coefficients modulo p") {
  auto r = ring(2, {"x", "y"});
  auto f = poly(r, "x^2*y + 3*y");
  CHECK(f.to_string() == "x^2*y+y");
  CHECK(poly(r, "0").is_zero());
  CHECK(poly(r, "1+1").is_zero());
  auto r3 = ring(2, {"x", "y", "z"});
  CHECK(poly(r3, "x^3+y^3+z^3").size() == 3);
}

TEST_CASE("parsing handles signs, whitespace and repeated variables") {
  auto r = ring(5, {"x", "y"});
  CHECK(poly(r, " - x + 2 * y ").to_string() == "4*x+2*y");
  CHECK(poly(r, "x*x*y^2") == poly(r, "x^2*y^2"));
  CHECK(poly(r, "x - x").is_zero());
  CHECK(poly(r, "7").to_string() == "2");
}

TEST_CASE("parse errors report the offending position") {
  auto r = ring(5, {"x", "y"});
  try {
    (void)poly(r, "x + w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(poly(r, "x +"), ParseError);
  CHECK_THROWS_AS(poly(r, "x^"), ParseError);
  CHECK_THROWS_AS(poly(r, "2.5*x"), ParseError);
  CHECK_THROWS_AS(poly(r, "x y"), ParseError);
}

TEST_CASE("arithmetic examples") {
  auto r2 = ring(2, {"x", "y"});
  CHECK(poly(r2, "x+y") * poly(r2, "x+y") == poly(r2, "x^2+y^2"));
  auto r5 = ring(5, {"x", "y"});
  CHECK(poly(r5, "x+y") * poly(r5, "x-y") == poly(r5, "x^2+4*y^2"));
  auto f = poly(r5, "3*x*y+1");
  CHECK(f + Polynomial(r5) == f);
  CHECK((f - f).is_zero());
  CHECK(f.scaled(2) == poly(r5, "x*y+2"));
  CHECK(f.pow(0) == Polynomial::constant(r5, 1));
  CHECK(f.monic() == poly(r5, "x*y+2"));
}

TEST_CASE("degrees and homogeneity") {
  auto r = ring(3, {"x", "y"});
  CHECK_FALSE(Polynomial(r).degree().has_value());
  CHECK(poly(r, "x^2*y+y").degree() == 3u);
  CHECK(poly(r, "x^2*y+y").low_degree() == 1u);
  CHECK(poly(r, "x^2+x*y").is_homogeneous());
  CHECK_FALSE(poly(r, "x^2+y").is_homogeneous());
  CHECK(Polynomial(r).is_homogeneous());
}

TEST_CASE("frobenius powers scale exponents") {
  auto r3 = ring(3, {"x", "y"});
  CHECK(poly(r3, "x+y").frobenius(1) == poly(r3, "x^3+y^3"));
  CHECK(Polynomial(r3).frobenius(4).is_zero());
  auto r5 = ring(5, {"x", "z"});
  CHECK(poly(r5, "2*x+z").frobenius(2) == poly(r5, "2*x^25+z^25"));
  CHECK(poly(r5, "2*x+z").frobenius(0) == poly(r5, "2*x+z"));
}

TEST_CASE("printing emits descending terms with coefficients in [1, p)") {
  auto r = ring(7, {"x", "y", "z"});
  CHECK(poly(r, "z + x^2 - 1 + 3*x*y").to_string() == "x^2+3*x*y+z+6");
  CHECK(Polynomial(r).to_string() == "0");
  auto lex = ring(7, {"x", "y"}, MonomialOrder::lex());
  CHECK(poly(lex, "y^5 + x").to_string() == "x+y^5");
}

TEST_CASE("operations across different rings are refused") {
  auto a = ring(5, {"x", "y"});
  auto b = ring(7, {"x", "y"});
  auto c = ring(5, {"x", "y"}, MonomialOrder::lex());
  CHECK_THROWS_AS(poly(a, "x") + poly(b, "x"), RingMismatch);
  CHECK_THROWS_AS(poly(a, "x") * poly(c, "x"), RingMismatch);
  CHECK(poly(a, "x") + poly(ring(5, {"x", "y"}), "y") == poly(a, "x+y"));
}

TEST_CASE("rings validate their variables") {
  CHECK_THROWS_AS(ring(5, {"x", "x"}), std::invalid_argument);
  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS(ring(5, many));
}

TEST_CASE("re-expressing in another order and substituting variables") {
  auto g = ring(5, {"x", "y"});
  auto l = g->with_order(MonomialOrder::lex());
  auto f = poly(g, "y^3+x");
  CHECK(f.in_ring(l).to_string() == "x+y^3");
  auto big = ring(5, {"a", "b", "c"});
  std::vector<std::size_t> map{2, 0};
  CHECK(f.mapped(big, map) == poly(big, "a^3+c"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto r = ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_poly(r, rng, 4, 3);
      auto g = random_poly(r, rng, 4, 3);
      auto h = random_poly(r, rng, 3, 2);
      REQUIRE((f + g) * h == f * h + g * h);
      REQUIRE(f * Polynomial::constant(r, 1) == f);
      REQUIRE((f - f).is_zero());
      REQUIRE(f * g == g * f);
      REQUIRE(parse_polynomial(f.to_string(), r) == f);
    }
  }
}

TEST_CASE("frobenius agrees with repeated multiplication") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring(p, {"x", "y"});
    for (int trial = 0; trial < 30; ++trial) {
      auto f = random_poly(r, rng, 4, 2);
      for (unsigned e = 0; e <= 2; ++e) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        auto power = Polynomial::constant(r, 1);
        for (std::uint64_t i = 0; i < q; ++i) power = power * f;
        REQUIRE(f.frobenius(e) == power);
        REQUIRE(f.pow(q) == power);
      }
    }
  }
}
