#include <doctest.h>

#include "fibtop/cli.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace fibtop;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fibtop");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIBTOP_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("report JSON for small genus") {
  for (int g = 1; g <= 3; ++g) {
    CAPTURE(g);
    Run r = run({"report", "--genus", std::to_string(g), "--json"});
    REQUIRE(r.code == kExitOk);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["genus"] == g);
    CHECK(j["b1_y"] == 2);
    CHECK(j["b1_x"] == 2);
    CHECK(j["b2_x"] == 2);
    CHECK(j["signature"] == 0);
    CHECK(j["symplectic"] == true);
    CHECK(j["canonical_class"][0] == 2 * g - 2);
    CHECK(j["kodaira"] == (g == 1 ? "0" : "1"));
    CHECK(j["psc_verdict"] == "excluded");
    CHECK(j.contains("oracles"));
    CHECK(j["oracles"]["betti_wang_agrees"] == true);
    CHECK(r.err.empty());
  }
}

TEST_CASE("twists matching the standard monodromy reproduce the report") {
  CHECK(cmd_twists("Ta1", 1) == cmd_report(1));
  CHECK(cmd_twists("Tb2 Ta2^-1 Ta1", 2) == cmd_report(2));
  Run a = run({"twists", "Tb2 Ta2^-1 Ta1", "--genus", "2", "--json"});
  Run b = run({"report", "--genus", "2", "--json"});
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out) == nlohmann::json::parse(b.out));
}

TEST_CASE("identity monodromy") {
  for (int g = 1; g <= 3; ++g) {
    ReportDocument d = cmd_twists("", g);
    CHECK(d.b1_y == static_cast<std::size_t>(2 * g + 1));
    CHECK(d.betti_wang_agrees);
  }
  Run r = run({"twists", "", "--genus", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("dim ker") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"report"}).code == kExitUsage);
  CHECK(run({"report", "--genus", "0"}).code == kExitUsage);
  CHECK(run({"report", "--genus", "x"}).code == kExitUsage);
  CHECK(run({"twists", "Ta3", "--genus", "2"}).code == kExitUsage);
  CHECK(run({"twists", "Tc1", "--genus", "2"}).code == kExitUsage);
  CHECK(run({"alexander", fixture("missing.txt")}).code == kExitUsage);
  CHECK(run({"fox", "a b", "c"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK_THROWS_AS(cmd_report(0), std::invalid_argument);
}

TEST_CASE("alexander on fixtures") {
  Run t = run({"alexander", fixture("trefoil.txt")});
  REQUIRE(t.code == 0);
  auto tl = lines(t.out);
  CHECK(tl[0] == "H1: Z");
  CHECK(t.out.find("E1: 1 - t + t^2") != std::string::npos);
  CHECK(t.out.find("symmetrized: t^-1 - 1 + t") != std::string::npos);

  AlexanderResult tr = cmd_alexander(slurp(fixture("trefoil.txt")));
  CHECK(tr.matrix_rows == 1);
  CHECK(tr.matrix_cols == 2);
  REQUIRE(tr.symmetrized);

  Run f = run({"alexander", fixture("free2.txt")});
  REQUIRE(f.code == 0);
  CHECK(f.out.find("H1: Z^2") != std::string::npos);
  CHECK(f.out.find("undefined (E1 = 0)") != std::string::npos);

  AlexanderResult fam = cmd_alexander(slurp(fixture("family_g2.txt")));
  CHECK(fam.abelianization.group.to_string() == "Z^2");
  Run g2 = run({"alexander", fixture("family_g2.txt")});
  CHECK(g2.out.find("1 - 3*t + t^2") != std::string::npos);
  CHECK(fam.delta.full == cmd_report(2).alexander_full);
}

TEST_CASE("fox subcommand") {
  Run r = run({"fox", "a b a^-1", "a"});
  REQUIRE(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "1 - a b a^-1");
  CHECK(l[1] == "abelianized: 1 - b");

  FoxResult c = cmd_fox("a b a^-1 b^-1", "b");
  CHECK(c.derivative.to_string(c.alphabet) == "a - a b a^-1 b^-1");
  FoxResult e = cmd_fox("b", "a", {"a", "b"});
  CHECK(e.derivative.is_zero());
}

TEST_CASE("JSON round trip and text agreement") {
  for (int g = 1; g <= 4; ++g) {
    ReportDocument d = cmd_report(g);
    CHECK(report_from_json(to_json(d)) == d);
    CHECK(report_from_json(nlohmann::json::parse(to_json(d).dump())) == d);
    CHECK(consistency_violations(d).empty());
    std::string text = to_text(d);
    CHECK(text.find("sw_x: " + d.sw_x.to_string()) != std::string::npos);
    CHECK(text.find("b1_x: " + std::to_string(d.b1_x)) != std::string::npos);
    CHECK(text.find("intersection_form: " + d.intersection_form) != std::string::npos);
    CHECK(to_json(d)["sw_x"]["text"] == d.sw_x.to_string());
  }
}

TEST_CASE("property: polynomial JSON round trip") {
  auto g = fibtest::rng(61);
  VarSet v{"t", "b1", "b2"};
  for (int c = 0; c < fibtest::kCases; ++c) {
    LaurentPoly p = fibtest::random_poly(g, v, 6, -4, 4);
    if (c % 10 == 0) p = p * LaurentPoly::constant(v, Integer("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(nlohmann::json::parse(poly_to_json(p).dump())) == p);
  }
}
