#include "doctest.h"
#include "support.hpp"

#include "fte/harness.hpp"

#include "json.hpp"

using namespace fte;
using namespace fte::testing;

namespace {

const IdentityCheck* find(const std::vector<IdentityCheck>& checks, std::string_view name) {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Manifest manifest(std::string_view text, std::string id) { return parse_manifest(text, std::move(id)); }

}  // namespace

TEST_CASE("bound certificate on the fermat cubic") {
  auto s = fermat_cubic();
  auto profile = cohomology_profile(s);
  auto seq = polys(s.ambient(), {"x", "y"});
  auto cert = verify_bound(s, seq, profile, 1);
  CHECK(cert.fte == 1);
  CHECK(cert.n0 == 1);
  CHECK(cert.e0 == 1);
  CHECK(cert.hsl_top == 1);
  CHECK(cert.hsl_low == 0);
  CHECK(cert.bound == 2);
  CHECK(cert.holds);
  CHECK(cert.certified_stops);
  CHECK(cert.heuristic_agrees);
  CHECK(cert.heuristic_e == 1);
  CHECK(cert.witness == "z^2");
  CHECK_THROWS_AS(verify_bound(s, seq, profile, std::nullopt), MissingHslTop);
}

TEST_CASE("bound certificate on the two planes") {
  auto s = two_planes(2);
  auto profile = cohomology_profile(s);
  auto seq = random_filter_regular_sequence(s, 2, 2, 3);
  auto cert = verify_bound(s, seq, profile, std::nullopt);
  CHECK(cert.fte == 0);
  CHECK(cert.e0 == 1);
  CHECK(cert.hsl_used == 0);
  CHECK(cert.bound == 1);
  CHECK(cert.holds);
  CHECK(cert.heuristic_agrees);

  CHECK_THROWS_AS(verify_bound(s, polys(s.ambient(), {"x1"}), profile, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(verify_bound(s, polys(s.ambient(), {"x1", "x2"}), profile, std::nullopt), PreconditionError);
}

TEST_CASE("bound certificate in a polynomial ring") {
  auto r = ring(5, {"x", "y"});
  QuotientRing s(r);
  auto cert = verify_bound(s, polys(r, {"x", "y"}), cohomology_profile(s), std::nullopt);
  CHECK(cert.fte == 0);
  CHECK(cert.bound == 1);
  CHECK(cert.holds);
}

TEST_CASE("low hsl for linear sequences uses frobenius powers") {
  auto s = two_planes(3);
  auto profile = cohomology_profile(s);
  CHECK(low_hsl_for_sequence(polys(s.ambient(), {"x1+x3", "x2+x4"}), s, profile) == 0);
}

TEST_CASE("identity checks on the two planes") {
  auto s = two_planes(2);
  auto profile = cohomology_profile(s);
  auto seq = polys(s.ambient(), {"x1^2+x3^2", "x2^2+x4^2"});
  auto closure = frobenius_closure(Ideal(s.ambient(), seq), s, std::nullopt);
  auto checks = verify_identities(s, seq, profile, &closure);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.note);
    CHECK(c.status == CheckStatus::pass);
  }
  const auto* length = find(checks, "limit_closure_length");
  REQUIRE(length);
  CHECK(length->lhs == "2");
  CHECK(length->rhs == "2");
  const auto* socle = find(checks, "socle_splitting_length[1,1]");
  REQUIRE(socle);
  CHECK(socle->lhs == "1");
  CHECK(find(checks, "socle_splitting_length[2,1]"));
  CHECK(find(checks, "weak_sequence"));
  CHECK(find(checks, "hsl_low_routes_agree"));
}

TEST_CASE("identity checks skip what does not apply") {
  auto s = two_planes(2);
  auto profile = cohomology_profile(s);
  auto checks = verify_identities(s, polys(s.ambient(), {"x1+x3", "x2+x4"}), profile);
  const auto* formula = find(checks, "limit_closure_chain_matches_formula");
  REQUIRE(formula);
  CHECK(formula->status == CheckStatus::skipped);
  CHECK_FALSE(formula->note.empty());
  for (const auto& c : checks) CHECK(c.status != CheckStatus::fail);
}

TEST_CASE("identity checks on a cohen-macaulay ring") {
  auto s = fermat_cubic();
  auto profile = cohomology_profile(s);
  auto checks = verify_identities(s, polys(s.ambient(), {"x^2", "y^2"}), profile);
  const auto* length = find(checks, "limit_closure_length");
  REQUIRE(length);
  CHECK(length->status == CheckStatus::pass);
  CHECK(length->lhs == "0");
}

TEST_CASE("run_all on small manifests") {
  std::vector<Manifest> ms{
      manifest("[ring]\np = 2\nvars = [\"x\", \"y\"]\n[[sequence]]\nelements = [\"x\", \"y\"]\n"
               "[sampling]\ncount = 2\ndegree = 2\nseed = 4\n",
               "plane"),
      manifest("[ring]\np = 2\nvars = [\"x\", \"y\", \"z\"]\nrelations = [\"x^3+y^3+z^3\"]\n"
               "[[sequence]]\nelements = [\"x\", \"y\"]\n",
               "fermat_missing_top"),
  };
  auto report = run_all(ms);
  REQUIRE(report.rings.size() == 2);
  CHECK(report.rings[0].tasks.size() == 3);
  CHECK(report.rings[0].hsl_top_source == "f-pure");
  CHECK(report.rings[1].hsl_top_source == "missing");
  CHECK(report.input_errors == 1);
  CHECK(report.certificates == 3);
  CHECK(report.holding == 3);
  CHECK(report.exit_code() == 2);
  CHECK(report.rings[0].tasks[1].source == "sampled");
  CHECK(report.rings[0].tasks[1].seed == 4u);
  CHECK(report.rings[0].tasks[2].seed == 5u);
}

TEST_CASE("run_all on an empty manifest") {
  std::vector<Manifest> ms{manifest("[ring]\np = 3\nvars = [\"x\"]\n[sampling]\ncount = 0\n", "empty")};
  auto report = run_all(ms);
  CHECK(report.certificates == 0);
  CHECK(report.exit_code() == 0);
  auto json = nlohmann::json::parse(report_to_json(report));
  CHECK(json["schema"] == kReportSchema);
  CHECK(json["rings"][0]["tasks"].empty());
}

TEST_CASE("reports are deterministic across job counts") {
  std::vector<Manifest> ms{
      manifest("[ring]\np = 2\nvars = [\"x1\", \"x2\", \"x3\", \"x4\"]\n"
               "relations = [\"x1*x3\", \"x1*x4\", \"x2*x3\", \"x2*x4\"]\n"
               "[sampling]\ncount = 6\ndegree = 2\nseed = 9\n",
               "two_planes"),
  };
  RunOptions one;
  RunOptions four;
  four.jobs = 4;
  auto a = run_all(ms, one);
  auto b = run_all(ms, four);
  CHECK(a.exit_code() == 0);
  CHECK(report_to_json(a, false) == report_to_json(b, false));
  CHECK(report_to_json(a, false).find("seconds") == std::string::npos);
  CHECK(report_to_json(a, true).find("seconds") != std::string::npos);

  RunOptions reseeded;
  reseeded.seed = 100;
  auto c = run_all(ms, reseeded);
  CHECK(c.rings[0].tasks[0].seed == 100u);
}

TEST_CASE("report json layout") {
  auto s = fermat_cubic();
  std::vector<Manifest> ms{manifest(
      "[ring]\np = 2\nvars = [\"x\", \"y\", \"z\"]\nrelations = [\"x^3+y^3+z^3\"]\n"
      "[[sequence]]\nelements = [\"x\", \"y\"]\n[known]\nhsl_top = 1\nprovenance = \"hand computation\"\n",
      "fermat")};
  auto json = nlohmann::ordered_json::parse(report_to_json(run_all(ms)));
  CHECK(json["schema_version"] == kReportSchemaVersion);
  CHECK(json["summary"]["exit_code"] == 0);
  const auto& task = json["rings"][0]["tasks"][0];
  CHECK(task["certificate"]["fte"] == 1);
  CHECK(task["certificate"]["bound"] == 2);
  CHECK(task["certificate"]["holds"] == true);
  CHECK(json["rings"][0]["hsl_top_source"] == "manifest");
}
