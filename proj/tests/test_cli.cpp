#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "monorr/cli.hpp"
#include "monorr/io.hpp"
#include "support.hpp"

using namespace monorr;
using namespace monorr::test;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string d29 = "x^29, y^29, z^29, x^28*y^8*z^8, x^8*y^28*z^8, x^8*y^8*z^28";

} // namespace

TEST_CASE("parse_ideal") {
  auto s = parse_ideal("x^3, y^3, z^3, x*y*z");
  CHECK(s.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.generators.size() == 4);
  CHECK(s.generators[3] == std::map<std::string, exponent_t>{{"x", 1}, {"y", 1}, {"z", 1}});
  CHECK(to_ideal(parse_ideal(d29)) == example_d29());

  auto unit = parse_ideal("x^0");
  CHECK(unit.generators.size() == 1);
  CHECK(unit.generators[0].empty());
  CHECK(to_ideal(unit) == MonomialIdeal::unit(1));
  CHECK(to_ideal(parse_ideal("vars: x, y\n1")) == MonomialIdeal::unit(2));

  auto hdr = parse_ideal("vars: z, y, x\n x^2 , y*z");
  CHECK(hdr.variables == std::vector<std::string>{"z", "y", "x"});
  CHECK(to_ideal(hdr).generators().back() == Monomial{0, 0, 2});
  CHECK(parse_ideal("x*x^2").generators[0].at("x") == 3);
}

TEST_CASE("parse errors") {
  auto fails = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_ideal(text);
    } catch (const parse_error& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return true;
    }
    return false;
  };
  CHECK(fails("", 1, 1));
  CHECK(fails("x^-2", 1, 3));
  CHECK(fails("vars: x, y\nx, z", 2, 4));
  CHECK(fails("vars: x, x\nx", 1, 10));
  CHECK(fails("x^", 1, 3));
  CHECK(fails("x y", 1, 3));
  CHECK(fails("x^99999999999999999999999", 1, 3));
  CHECK(fails("x, , y", 1, 4));
  CHECK_THROWS_AS(parse_monomial("q", {"x"}), parse_error);
}

TEST_CASE("serialize round trip") {
  CHECK(serialize(parse_ideal("x^3, y*z")) == "vars: x, y, z\nx^3, y*z\n");
  Rng rng(83);
  const std::vector<std::string> names = {"a", "b", "c", "x1", "y_2"};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IdealSpec spec;
    spec.variables.assign(names.begin(), names.begin() + static_cast<long>(n));
    const int gens = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < gens; ++g) {
      std::map<std::string, exponent_t> t;
      for (std::size_t i = 0; i < n; ++i)
        if (auto e = rng() % 4; e > 0)
          t[spec.variables[i]] = e;
      spec.generators.push_back(t);
    }
    CHECK(parse_ideal(serialize(spec)) == spec);
    auto I = to_ideal(spec);
    CHECK(to_ideal(parse_ideal(serialize(to_spec(spec.variables, I)))) == I);
  }
  CHECK(format_ideal(MonomialIdeal(2), {"x", "y"}) == "<0>");
  CHECK(format_monomial(Monomial{0, 0}, {"x", "y"}) == "1");
  CHECK(format_ideal(ideal("x^2, x*y^3"), {"x", "y"}) == "<x^2, x*y^3>");
}

TEST_CASE("cli classify") {
  auto r = run({"classify", "--ideal", "x^3, y^3, z^3, x*y*z"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: bad") != std::string::npos);
  CHECK(r.out.find("x^2*y^2*z^2") != std::string::npos);

  auto j = run({"classify", "--format", "json", "--ideal", "x^3, y^3, z^3, x*y*z"});
  REQUIRE(j.code == 0);
  auto doc = json::parse(j.out);
  CHECK(doc["command"] == "classify");
  CHECK(doc["version"] == cli::version);
  CHECK(doc["input"]["vars"] == json({"x", "y", "z"}));
  CHECK(doc["result"]["verdict"] == "bad");
  CHECK(doc["result"]["witness"]["monomial"] == json({2, 2, 2}));
  CHECK(doc["result"]["witness"]["power"] == 2);
}

TEST_CASE("cli closure and stabilize") {
  auto r = run({"closure", "--ideal", d29});
  CHECK(r.code == 0);
  CHECK(r.out.find("closure = I + <x^26*y^26*z^26>") != std::string::npos);

  auto s = run({"closure", "-"}, d29);
  CHECK(s.code == 0);
  CHECK(s.out == r.out);

  auto bad = run({"closure", "--ideal", "x^3, y^3, z^3, x*y*z"});
  CHECK(bad.code == cli::bad_ideal_failure);
  CHECK(bad.err.find("x^2*y^2*z^2") != std::string::npos);
  CHECK(bad.err.find("oracle") != std::string::npos);

  auto forced = run({"closure", "--skip-classify", "--ideal", "x^3, y^3, z^3, x*y*z"});
  CHECK(forced.code == 0);

  auto st = run({"stabilize", "--axis", "x", "--format", "json", "--ideal", d29});
  REQUIRE(st.code == 0);
  auto doc = json::parse(st.out);
  CHECK(doc["result"]["axes"].size() == 1);
  CHECK(doc["result"]["axes"][0]["q"] == 2);
  CHECK(run({"stabilize", "--axis", "2", "--ideal", d29}).out.find("axis y") != std::string::npos);
  CHECK(run({"stabilize", "--axis", "q", "--ideal", d29}).code == cli::failure);
}

TEST_CASE("cli other commands") {
  auto box = run({"box-ideal", "--box", "1,0", "--ideal", "x^5, y^5, x*y^4, x^4*y"});
  CHECK(box.code == 0);
  CHECK(box.out == "input: <x^5, x^4*y, x*y^4, y^5>\n<x^5, x^4*y, x^3*y^2, x*y^4, y^5>\n");

  auto pw = run({"power", "--exp", "2", "--ideal", "x^3, y^3, z^3, x^2*y^2*z^2"});
  CHECK(pw.code == 0);
  CHECK(pw.out.find("generators: 9") != std::string::npos);

  auto col = run({"colon", "--by", "x", "--ideal", "x^2, y"});
  CHECK(col.code == 0);
  CHECK(col.out.find("<x, y>") != std::string::npos);

  auto orc = run({"oracle", "--kmax", "10", "--ideal", d29});
  CHECK(orc.code == 0);
  CHECK(orc.out.find("union = I + <x^26*y^26*z^26>") != std::string::npos);
  CHECK(orc.out.find("stabilized: yes") != std::string::npos);

  auto fr = run({"freiman", "--format", "json", "--ideal", "x^3, x^2*y, x*y^2, y^3"});
  CHECK(fr.code == 0);
  CHECK(json::parse(fr.out)["result"]["verdict"] == "freiman");

  auto vg = run({"very-good", "--ideal", "x^5, y^5, x*y^4, x^4*y"});
  CHECK(vg.code == 0);
  CHECK(vg.out.find("very good: no") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"classify", "--ideal", "x^-1"}).code == cli::parse_failure);
  CHECK(run({"classify", "--ideal", "x^2, x*y"}).code == cli::not_m_primary_failure);
  CHECK(run({"frobnicate"}).code == cli::parse_failure);
  CHECK(run({}).code == cli::parse_failure);
  CHECK(run({"classify", "--format", "xml", "--ideal", "x"}).code == cli::parse_failure);
  CHECK(run({"box-ideal", "--ideal", "x^2, y^2"}).code == cli::parse_failure);
  CHECK(run({"classify", "/nonexistent/file"}).code == cli::failure);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("json output is byte stable") {
  for (const char* cmd : {"classify", "closure", "oracle", "freiman"}) {
    auto a = run({cmd, "--format", "json", "--ideal", d29});
    auto b = run({cmd, "--format", "json", "--ideal", d29});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto t1 = run({"closure", "--threads", "3", "--format", "json", "--ideal", d29});
  auto t0 = run({"closure", "--format", "json", "--ideal", d29});
  CHECK(t1.out == t0.out);
}
