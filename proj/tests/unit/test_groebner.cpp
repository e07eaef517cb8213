#include "doctest.h"
#include "fte/groebner.hpp"
#include "support.hpp"

using namespace fte;
using namespace fte::testing;

namespace {

std::vector<std::string> basis_strings(const GroebnerBasis& gb) { return strings(gb.elements()); }

bool contains_string(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("normal form examples") {
  auto r = ring(5, {"x", "y"}, MonomialOrder::lex());
  auto gens = polys(r, {"x^2-y"});
  auto gb = buchberger(r, gens);
  CHECK(normal_form(poly(r, "x^2*y"), gb) == poly(r, "y^2"));
  CHECK(normal_form(gens[0], gb).is_zero());

  auto f = ring(2, {"x", "y", "z"});
  auto fermat = buchberger(f, polys(f, {"x^2", "y^2", "x^3+y^3+z^3"}));
  CHECK(normal_form(poly(f, "z^4"), fermat).is_zero());
  CHECK_FALSE(normal_form(poly(f, "z^2"), fermat).is_zero());
}

TEST_CASE("buchberger small examples") {
  auto r = ring(3, {"x", "y"});
  CHECK(basis_strings(buchberger(r, polys(r, {"x+y", "y"}))) == std::vector<std::string>{"y", "x"});
  CHECK(basis_strings(buchberger(r, polys(r, {"x"}))) == std::vector<std::string>{"x"});
  CHECK(buchberger(r, std::vector<Polynomial>{}).size() == 0);
  CHECK(buchberger(r, polys(r, {"x", "x+1"})).is_unit());

  auto tp = ring(2, {"x1", "x2", "x3", "x4"});
  auto gb = buchberger(tp, polys(tp, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}));
  CHECK(gb.size() == 4);
}

TEST_CASE("reduced bases match an independent oracle") {
  // Values from tests/oracles/sympy_oracles.py.
  auto g5 = ring(5, {"x", "y"});
  auto a = basis_strings(buchberger(g5, polys(g5, {"x^2+y", "x*y-1"})));
  CHECK(a.size() == 3);
  CHECK(contains_string(a, "x^2+y"));
  CHECK(contains_string(a, "x*y+4"));
  CHECK(contains_string(a, "y^2+x"));

  auto l5 = ring(5, {"x", "y"}, MonomialOrder::lex());
  auto b = basis_strings(buchberger(l5, polys(l5, {"x^2+y", "x*y-1"})));
  CHECK(b == std::vector<std::string>{"y^3+1", "x+y^2"});

  auto g7 = ring(7, {"x", "y"});
  auto c = basis_strings(buchberger(g7, polys(g7, {"x^3-2*x*y", "x^2*y-2*y^2+x"})));
  CHECK(c.size() == 3);
  CHECK(contains_string(c, "x^2"));
  CHECK(contains_string(c, "x*y"));
  CHECK(contains_string(c, "y^2+3*x"));

  auto l7 = ring(7, {"x", "y"}, MonomialOrder::lex());
  CHECK(basis_strings(buchberger(l7, polys(l7, {"x^3-2*x*y", "x^2*y-2*y^2+x"}))) ==
        std::vector<std::string>{"y^3", "x+5*y^2"});

  auto f2 = ring(2, {"x", "y", "z"});
  auto d = basis_strings(buchberger(f2, polys(f2, {"x^3+y^3+z^3", "x+y"})));
  CHECK(d.size() == 2);
  CHECK(contains_string(d, "z^3"));
  CHECK(contains_string(d, "x+y"));
}

TEST_CASE("buchberger into another order") {
  auto g = ring(5, {"x", "y"});
  auto gb = buchberger(polys(g, {"x^2+y", "x*y-1"}), MonomialOrder::lex());
  CHECK(basis_strings(gb) == std::vector<std::string>{"y^3+1", "x+y^2"});
}

TEST_CASE("s-polynomials of a reduced basis reduce to zero") {
  auto r = ring(7, {"x", "y", "z"});
  auto gb = buchberger(r, polys(r, {"x^2*y-z^3", "x*y^2-2*z", "y*z-x"}));
  auto els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      REQUIRE(normal_form(s_polynomial(els[i], els[j]), gb).is_zero());
    }
  }
  for (const auto& e : els) {
    CHECK(e.leading_coeff() == 1);
    for (const auto& other : els) {
      if (&e == &other) continue;
      for (const auto& t : e.terms()) CHECK_FALSE(other.leading_monomial().divides(t.monomial));
    }
  }
}

TEST_CASE("free vectors and module bases") {
  auto r = ring(3, {"x", "y"});
  FreeVector v({poly(r, "x"), poly(r, "y")});
  FreeVector w({poly(r, "y"), Polynomial(r)});
  CHECK((v + w)[0] == poly(r, "x+y"));
  CHECK(v.times(poly(r, "x")).degree() == 2u);
  CHECK(FreeVector(r, 2).is_zero());
  CHECK(FreeVector::basis(r, 3, 1)[1] == Polynomial::constant(r, 1));

  std::vector<FreeVector> gens{v, w};
  auto gb = buchberger(r, 2, gens);
  CHECK(normal_form(v.times(poly(r, "x+1")) + w.times(poly(r, "y")), gb).is_zero());
  CHECK_FALSE(normal_form(FreeVector::basis(r, 2, 1), gb).is_zero());
  for (const auto& g : gb.vectors()) CHECK(g.rank() == 2);
}

TEST_CASE("syzygy examples") {
  auto r = ring(5, {"x", "y"});
  std::vector<FreeVector> koszul{FreeVector({poly(r, "x")}), FreeVector({poly(r, "y")})};
  auto s = syzygies(r, 1, koszul);
  REQUIRE(s.size() == 1);
  CHECK((s[0][0] * poly(r, "x") + s[0][1] * poly(r, "y")).is_zero());
  CHECK(s[0][0].degree() == 1u);

  std::vector<FreeVector> single{FreeVector({poly(r, "x")})};
  CHECK(syzygies(r, 1, single).empty());

  auto tp = ring(2, {"x1", "x2", "x3", "x4"});
  std::vector<FreeVector> cols;
  for (const auto& g : polys(tp, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"})) cols.push_back(FreeVector({g}));
  auto syz = syzygies(tp, 1, cols);
  CHECK(syz.size() == 4);
  for (const auto& z : syz) {
    Polynomial sum(tp);
    for (std::size_t i = 0; i < cols.size(); ++i) sum += cols[i][0] * z[i];
    CHECK(sum.is_zero());
  }
}

TEST_CASE("syzygies of a rank-2 matrix annihilate it") {
  auto r = ring(3, {"x", "y", "z"});
  std::vector<FreeVector> cols{FreeVector({poly(r, "x"), poly(r, "y")}), FreeVector({poly(r, "y"), poly(r, "z")}),
                               FreeVector({poly(r, "z"), poly(r, "x")})};
  auto syz = syzygies(r, 2, cols);
  CHECK_FALSE(syz.empty());
  for (const auto& z : syz) {
    FreeVector image(r, 2);
    for (std::size_t i = 0; i < cols.size(); ++i) image += cols[i].times(z[i]);
    CHECK(image.is_zero());
  }
}

TEST_CASE("pruning drops redundant generators") {
  auto r = ring(5, {"x", "y"});
  auto kept = prune_generators(r, polys(r, {"x", "x*y", "y", "x+y", "0"}));
  CHECK(kept.size() == 2);
}
