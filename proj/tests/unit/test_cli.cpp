#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fte_cli/cli.hpp"
#include "json.hpp"

namespace {

const std::filesystem::path corpus{FTE_CORPUS_DIR};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fte");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fte::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ring_file(const char* name) { return (corpus / name).string(); }

}  // namespace

TEST_CASE("gb and nf") {
  auto gb = run({"gb", "--ring", ring_file("poly_f5_xy.toml"), "--ideal", "x^2+y,x*y-1"});
  CHECK(gb.code == 0);
  CHECK(gb.out.find("y^2+x") != std::string::npos);
  auto lex = run({"gb", "--ring", ring_file("poly_f5_xy.toml"), "--order", "lex", "--ideal", "x^2+y,x*y-1"});
  CHECK(lex.out == "y^3+1\nx+y^2\n");
  auto nf = run({"nf", "--ring", ring_file("fermat_cubic_f2.toml"), "--ideal", "x^2,y^2", "--poly", "z^4"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "0\n");
}

TEST_CASE("ideal commands") {
  auto c = run({"colon", "--ring", ring_file("two_planes_f2.toml"), "--ideal", "0", "--by", "x1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("x3") != std::string::npos);
  auto s = run({"saturate", "--ring", ring_file("poly_f2_xy.toml"), "--ideal", "x^2,x*y"});
  CHECK(s.out.find("stabilization index: 2") != std::string::npos);
  auto d = run({"dim", "--ring", ring_file("two_planes_f2.toml")});
  CHECK(d.out == "2\n");
}

TEST_CASE("frobenius commands") {
  auto f = run({"fte", "--ring", ring_file("fermat_cubic_f2.toml"), "--ideal", "x,y"});
  CHECK(f.code == 0);
  CHECK(f.out.find("fte: 1") != std::string::npos);
  CHECK(f.out.find("witness: z^2") != std::string::npos);
  CHECK(f.out.find("certified: no") != std::string::npos);
  auto cert = run({"fclosure", "--ring", ring_file("fermat_cubic_f2.toml"), "--ideal", "x,y", "--e-star", "2"});
  CHECK(cert.out.find("certified: yes") != std::string::npos);
  auto fedder = run({"fedder", "--ring", ring_file("fermat_cubic_f2.toml")});
  CHECK(fedder.out == "F-pure: no\n");
}

TEST_CASE("sequence and invariant commands") {
  auto fr = run({"frcheck", "--ring", ring_file("two_planes_f2.toml"), "--seq", "x1"});
  CHECK(fr.out.find("filter regular: no") != std::string::npos);
  auto lim = run({"limclosure", "--ring", ring_file("two_planes_f2.toml"), "--seq", "x1+x3,x2+x4"});
  CHECK(lim.out.find("quotient length: 2") != std::string::npos);
  auto inv = run({"invariants", "--ring", ring_file("two_planes_f2.toml")});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("resolution ranks: 1, 4, 4, 1") != std::string::npos);
  CHECK(inv.out.find("low lengths: 0, 1") != std::string::npos);
}

TEST_CASE("verify writes a report") {
  auto path = std::filesystem::temp_directory_path() / "fte_cli_report.json";
  std::filesystem::remove(path);
  auto v = run({"verify", ring_file("two_planes_f2.toml"), ring_file("empty_f2.toml"), "--out", path.string()});
  CHECK(v.code == 0);
  REQUIRE(std::filesystem::exists(path));
  std::ifstream in(path);
  auto json = nlohmann::json::parse(in);
  CHECK(json["summary"]["exit_code"] == 0);
  CHECK(json["rings"].size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("empty manifest exits zero") {
  auto v = run({"verify", "--ring", ring_file("empty_f2.toml")});
  CHECK(v.code == 0);
}

TEST_CASE("input errors exit with 2") {
  auto path = std::filesystem::temp_directory_path() / "fte_cli_bad.json";
  std::filesystem::remove(path);
  CHECK(run({"verify", ring_file("invalid/bad_prime.toml"), "--out", path.string()}).code == 2);
  CHECK_FALSE(std::filesystem::exists(path));
  CHECK(run({"verify", ring_file("invalid/unterminated.toml")}).code == 2);
  CHECK(run({"gb", "--ring", ring_file("poly_f2_xy.toml"), "--ideal", "x+"}).code == 2);
  CHECK(run({"gb", "--ring", ring_file("poly_f2_xy.toml"), "--ideal", "w"}).code == 2);
  CHECK(run({"gb"}).code == 2);
  CHECK(run({"gb", "--ring", ring_file("nope.toml")}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"gb", "--ring", ring_file("poly_f2_xy.toml"), "--order", "deglex"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("help exits zero") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}
