#include "doctest.h"
#include "properties.hpp"

using namespace fte;
using namespace fte::testing;

namespace {

void check_all(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.instances > 0);
    CHECK(r.failures == 0);
  }
}

}  // namespace

TEST_CASE("groebner properties") {
  check_all(groebner_properties(ring(2, {"x", "y", "z"}), 1));
  check_all(groebner_properties(ring(5, {"x", "y"}), 2));
  check_all(groebner_properties(ring(7, {"x", "y", "z"}, MonomialOrder::lex()), 3));
  check_all(groebner_properties(ring(3, {"x1", "x2", "x3", "x4"}), 4));
}

TEST_CASE("ideal properties") {
  check_all(ideal_properties(ring(3, {"x", "y", "z"}), 5, 40));
  check_all(ideal_properties(ring(2, {"x1", "x2", "x3", "x4"}), 6, 20));
}

TEST_CASE("frobenius properties") {
  auto f = fermat_cubic();
  std::vector<PreimageCase> fermat_cases{{f.extend(polys(f.ambient(), {"x^2", "y^2"})), 1},
                                         {f.extend(polys(f.ambient(), {"x^4", "y^4"})), 2}};
  check_all(frobenius_properties(f, fermat_cases, 7));

  auto tp = two_planes(3);
  std::vector<PreimageCase> plane_cases{{tp.extend(polys(tp.ambient(), {"x1^3+x3^3", "x2^3+x4^3"})), 1}};
  check_all(frobenius_properties(tp, plane_cases, 8, 10));

  auto r = ring(2, {"x", "y"});
  std::vector<PreimageCase> poly_cases{{ideal(r, {"x^3", "x*y^2+y^5"}), 1}, {ideal(r, {"x^2*y", "y^7"}), 2}};
  check_all(frobenius_properties(QuotientRing(r), poly_cases, 9));
}

TEST_CASE("sequence properties") {
  check_all(sequence_properties(two_planes(2), 2, 2, 100, 10));
  check_all(sequence_properties(two_planes(3), 2, 1, 200, 10));
  check_all(sequence_properties(fermat_cubic(), 2, 1, 300, 10));
  check_all(sequence_properties(QuotientRing(ring(5, {"x", "y", "z"})), 3, 1, 400, 5));
}

TEST_CASE("hsl_low is constant within a ring") {
  for (auto s : {two_planes(2), two_planes(3), fermat_cubic(), QuotientRing(ring(2, {"x", "y"}))}) {
    auto profile = cohomology_profile(s);
    int value = -1;
    auto result = hsl_low_constancy(s, profile, 11, 8, &value);
    CAPTURE(result.first_failure);
    CHECK(result.failures == 0);
    CHECK(value == 0);
  }
}
