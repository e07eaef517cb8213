#include "doctest.h"
#include "fte/monomial.hpp"

#include <random>
#include <stdexcept>

using fte::Monomial;
using fte::MonomialOrder;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::uint32_t>(rng() % (max_exp + 1)));
  return m;
}

}  // namespace

TEST_CASE("monomial degree, divisibility and lcm") {
  auto a = mono({2, 1, 0});
  auto b = mono({3, 1, 4});
  CHECK(a.degree() == 3);
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(b.quotient_by(a) == mono({1, 0, 4}));
  CHECK(a.lcm(mono({0, 2, 1})) == mono({2, 2, 1}));
  CHECK(a.gcd(mono({0, 2, 1})) == mono({0, 1, 0}));
  CHECK(mono({1, 0, 0}).coprime(mono({0, 3, 1})));
  CHECK((a * b) == mono({5, 2, 4}));
  CHECK(a.scaled(4) == mono({8, 4, 0}));
  CHECK(mono({0, 0, 0}).is_one());
}

TEST_CASE("monomial exponent overflow is an error") {
  auto m = Monomial::variable(2, 0, 4000000000u);
  CHECK_THROWS_AS(m * m, std::overflow_error);
  CHECK_THROWS_AS(m.scaled(2), std::overflow_error);
}

TEST_CASE("monomials in different components never divide each other") {
  auto a = mono({1, 0});
  auto b = mono({1, 1});
  b.set_component(1);
  CHECK_FALSE(a.divides(b));
}

TEST_CASE("grevlex compares by degree and then the smallest last exponent") {
  auto order = MonomialOrder::grevlex();
  // x y^2 against x^2 z with x > y > z.
  CHECK(order.compare(mono({1, 2, 0}), mono({2, 0, 1})) == std::strong_ordering::greater);
  CHECK(order.compare(mono({0, 0, 2}), mono({1, 0, 0})) == std::strong_ordering::greater);
  CHECK(order.compare(mono({1, 1, 0}), mono({1, 1, 0})) == std::strong_ordering::equal);
}

TEST_CASE("lex compares the first differing exponent") {
  auto order = MonomialOrder::lex();
  CHECK(order.compare(mono({1, 0}), mono({0, 2})) == std::strong_ordering::greater);
  CHECK(order.compare(mono({1, 3}), mono({2, 0})) == std::strong_ordering::less);
}

TEST_CASE("elimination order ranks the first block above the rest") {
  auto order = MonomialOrder::elimination(1);
  CHECK(order.compare(mono({1, 0, 0}), mono({0, 5, 5})) == std::strong_ordering::greater);
  CHECK(order.compare(mono({0, 2, 0}), mono({0, 0, 1})) == std::strong_ordering::greater);
  CHECK(order.compare(mono({1, 0, 1}), mono({1, 1, 0})) == std::strong_ordering::less);
}

TEST_CASE("weighted grevlex uses the weighted degree first") {
  auto order = MonomialOrder::grevlex().with_weights({3, 1});
  CHECK(order.compare(mono({1, 0}), mono({0, 2})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(MonomialOrder::grevlex().with_weights({0, 1}), std::invalid_argument);
}

TEST_CASE("compare rejects an arity mismatch") {
  CHECK_THROWS_AS(MonomialOrder::grevlex().compare(mono({1, 0}), mono({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("module ranks: position over term and term over position") {
  auto a = mono({2, 0});
  auto b = mono({0, 1});
  b.set_component(1);
  auto pot = MonomialOrder::grevlex().with_module_rank(MonomialOrder::ModuleRank::position_over_term);
  auto top = MonomialOrder::grevlex().with_module_rank(MonomialOrder::ModuleRank::term_over_position);
  auto c = mono({0, 1});
  c.set_component(1);
  auto d = mono({0, 3});
  CHECK(pot.compare(d, b) == std::strong_ordering::greater);
  CHECK(top.compare(d, b) == std::strong_ordering::greater);
  auto e = mono({1, 0});
  e.set_component(1);
  CHECK(pot.compare(mono({0, 1}), e) == std::strong_ordering::greater);
  CHECK(top.compare(mono({0, 1}), e) == std::strong_ordering::less);
  CHECK(top.compare(a, c) == std::strong_ordering::greater);
}

TEST_CASE("orders are total, transitive and multiplicative on random monomials") {
  std::mt19937_64 rng(7);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(2),
                     MonomialOrder::grevlex().with_weights({2, 1, 3, 1})}) {
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_monomial(rng, 4, 5);
      auto b = random_monomial(rng, 4, 5);
      auto c = random_monomial(rng, 4, 5);
      auto ab = order.compare(a, b);
      REQUIRE((order.compare(b, a) == (0 <=> ab)));
      REQUIRE((ab == 0) == (a == b));
      if (ab < 0 && order.compare(b, c) < 0) REQUIRE(order.compare(a, c) < 0);
      REQUIRE((order.compare(a * c, b * c) == ab));
      REQUIRE((order.compare(a * c, a) != std::strong_ordering::less));
    }
  }
}

TEST_CASE("support mask is a divisibility prefilter") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_monomial(rng, 6, 2);
    auto b = random_monomial(rng, 6, 2);
    if (a.divides(b)) REQUIRE((a.support_mask() & ~b.support_mask()) == 0);
  }
}
