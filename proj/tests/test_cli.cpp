#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "curalg/report.hpp"

using namespace curalg;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CURALG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string data = CURALG_TEST_DATA;

}  // namespace

TEST_CASE("render_text flattens documents") {
  Json doc = {{"a", 1}, {"b", {{"c", true}, {"d", Json::array({1, 2})}}}};
  auto text = render_text(doc);
  CHECK(text.find("a") != std::string::npos);
  CHECK(text.find("b.c") != std::string::npos);
  CHECK(text.find("true") != std::string::npos);
  CHECK(scalar_json(Scalar(-1, 3)) == "-1/3");
}

TEST_CASE("cli cohomology and verification exit codes") {
  auto c = run("cohomology --L sl2 --module trivial --n 2 --json");
  CHECK(c.code == 0);
  auto j = Json::parse(c.out);
  CHECK(j["H"] == 0);
  CHECK(j["Z"] == 3);

  auto h2 = run("verify h2 --L sl2 --A tpoly:3 --json");
  CHECK(h2.code == 0);
  CHECK(Json::parse(h2.out)["dims"]["Z2"] == 11);

  auto bad = run("verify forms --L heis3 --A tpoly:3 --json");
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).contains("witness"));
}

TEST_CASE("cli larsson table and determinism") {
  auto a = run("larsson --g sl3 --max-degree 6 --json");
  CHECK(a.code == 0);
  auto j = Json::parse(a.out);
  std::vector<int> h;
  for (int d = 2; d <= 6; ++d) h.push_back(j["degrees"][std::to_string(d)]["H"].get<int>());
  CHECK(h == std::vector<int>{20, 0, 0, 0, 0});
  CHECK(j["quadratic_presentation"] == true);
  auto b = run("larsson --g sl3 --max-degree 6 --json");
  CHECK(a.out == b.out);

  auto d1 = run("derivations --L sl2 --A tpoly:3 --seed 5 --json");
  auto d2 = run("derivations --L sl2 --A tpoly:3 --seed 5 --json");
  CHECK(d1.code == 0);
  CHECK(d1.out == d2.out);
  auto v1 = run("verify der --L sl2 --A tpoly:3 --seed 9 --json");
  auto v2 = run("verify der --L sl2 --A tpoly:3 --seed 9 --json");
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
  CHECK(Json::parse(v1.out)["theorem"] == "der");
}

TEST_CASE("cli algebra files") {
  auto show = run("algebra show " + data + "/heis3.json --json");
  CHECK(show.code == 0);
  auto doc = Json::parse(show.out);
  auto orig = Json::parse(std::string(R"({"kind":"lie","dim":3,"basis":["x","y","z"],)") +
                          R"("table":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]})");
  CHECK(doc == orig);

  auto anti = run("algebra validate " + data + "/bad_anticomm.json --json");
  CHECK(anti.code == 2);
  auto e = Json::parse(anti.out)["error"];
  CHECK(e["axiom"] == "anticommutativity");
  CHECK(e["witness"] == Json::array({1, 2}));

  auto assoc = run("algebra validate " + data + "/bad_assoc.json --json");
  CHECK(assoc.code == 2);
  CHECK(Json::parse(assoc.out)["error"]["axiom"] == "associativity");
  CHECK(Json::parse(assoc.out)["error"]["witness"].size() == 3);

  auto schema = run("algebra validate " + data + "/bad_schema.json --json");
  CHECK(schema.code == 2);
  CHECK(Json::parse(schema.out)["error"]["where"] == "/table/0/j");

  CHECK(run("verify h2 --L " + data + "/heis3.json --A " + data + "/tpoly3.json").code == 0);
  CHECK(run("bogus").code == 2);
  CHECK(run("cohomology --L sl2 --n 7").code == 2);
}
