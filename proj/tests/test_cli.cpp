#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holoskew");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = holoskew::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("holoskew_test_" + name)).string();
}

}  // namespace

TEST_CASE("enumerate") {
  const Run c4 = run({"enumerate", "c4"});
  REQUIRE(c4.code == 0);
  const json r = c4.report();
  CHECK(r["schema"] == 1);
  CHECK(r["brace_count"] == 2);
  for (const auto& b : r["braces"]) {
    CHECK(b["biskew"]["swap_is_brace"] == true);
    CHECK(b["normal_in_hol"] == true);
  }
  CHECK(run({"enumerate", "c3"}).report()["brace_count"] == 1);

  const json d3 = run({"enumerate", "d3"}).report();
  std::size_t flagged = 0;
  for (const auto& b : d3["braces"]) {
    const std::string type = b["circle_type"];
    if (type == "d3" && b["biskew"]["swap_is_brace"] == true) ++flagged;
  }
  // the trivial brace and the opposite brace
  CHECK(flagged >= 2);
}

TEST_CASE("tg") {
  const json c4 = run({"tg", "c4", "--method", "both"}).report();
  CHECK(c4["T_order_direct"] == 1);
  CHECK(c4["T_order_miller"] == 1);
  CHECK(c4["agreement"] == true);
  CHECK(c4["H"].size() == 1);

  const json d3 = run({"tg", "d3", "--method", "both"}).report();
  CHECK(d3["agreement"] == true);
  const std::size_t t = d3["T_order_direct"];
  CHECK(t >= 2);
  CHECK(t % 2 == 0);
  for (const auto& m : d3["H"]) CHECK(m["isomorphism_to_G"].size() == 6);

  CHECK(run({"tg", "c5", "--method", "both"}).report()["T_order_miller"] == 1);
  CHECK(run({"tg", "c9", "--method", "direct"}).code == 2);
  CHECK(run({"tg", "c9"}).report()["method"] == "miller");
}

TEST_CASE("construct") {
  const json aw = run({"construct", "ault-watters", "heis3"}).report();
  CHECK(aw["brace"]["biskew"]["swap_is_brace"] == true);
  CHECK(aw["brace"]["circle_type"] == "ab3x3x3");
  CHECK_FALSE(aw["transcript"].empty());

  const json ring = run({"construct", "ring", "c4", "2xy"}).report();
  CHECK(ring["brace"]["circle_type"] == "ab2x2");
  CHECK(ring["cube_condition"] == true);
  CHECK(ring["brace"]["biskew"]["swap_is_brace"] == true);

  const json central = run({"construct", "central", "modext(3,2)"}).report();
  CHECK(central["brace"]["biskew"]["swap_is_brace"] == true);
  CHECK(central["brace"]["circle_type"] == "ab3x9");
  CHECK(central.contains("H_normal"));

  const json childs = run({"construct", "childs", "d3"}).report();
  CHECK(childs["brace"]["kernel"] == json::array({0, 1, 2}));

  const json semi = run({"construct", "semi", "--p", "3", "--q", "7", "--s", "1", "--t", "1"}).report();
  CHECK(semi["brace"]["circle_type"] == "c63");

  const json delta = run({"construct", "delta", "heis3", "--form", "0,1;2,0"}).report();
  CHECK(delta["brace"]["biskew"]["swap_is_brace"] == true);

  const json lift = run({"construct", "lift", "sd(c9,c2,inv)", "--rgf", "trivial"}).report();
  CHECK(lift["brace"]["kernel"].size() == 18);

  const Run bad = run({"construct", "childs", "ab2x2", "--k", "1", "--h", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("rejected") != std::string::npos);
  CHECK(run({"construct", "nonsense", "c4"}).code == 2);
  CHECK(run({"construct", "ault-watters", "d4"}).code == 2);
}

TEST_CASE("check") {
  const json g = run({"check", "q8"}).report();
  CHECK(g["aut_order"] == 24);
  CHECK(g["center"] == json::array({0, 2}));

  const std::string gamma_path = temp_path("gamma.json");
  {
    std::ofstream f(gamma_path);
    f << "[[0,1,2,3],[0,3,2,1],[0,1,2,3],[0,3,2,1]]";
  }
  const json k = run({"check", "c4", "--gamma", gamma_path}).report();
  CHECK(k["table1"]["all_hold"] == true);
  CHECK(k["brace"]["circle_type"] == "ab2x2");

  const std::string circle_path = temp_path("circle.json");
  {
    std::ofstream f(circle_path);
    f << "[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]";
  }
  CHECK(run({"check", "c4", "--circle", circle_path}).report()["brace"]["gamma"][1] == json::array({0, 3, 2, 1}));

  {
    std::ofstream f(gamma_path);
    f << "[[0,1,2,3],[0,3,2,1],[0,1,2,3],[0,1,2,3]]";
  }
  const json bad = run({"check", "c4", "--gamma", gamma_path}).report();
  CHECK(bad["table1"]["all_hold"] == false);
  CHECK(bad["rows"][0]["skew_brace"] == false);

  {
    std::ofstream f(gamma_path);
    f << "not json";
  }
  CHECK(run({"check", "c4", "--gamma", gamma_path}).code == 2);
  CHECK(run({"check", "c4", "--gamma", temp_path("missing.json")}).code == 2);
  std::remove(gamma_path.c_str());
  std::remove(circle_path.c_str());
}

TEST_CASE("exit codes and refusals") {
  const Run big = run({"enumerate", "c64"});
  CHECK(big.code == 2);
  CHECK(big.err.find("32") != std::string::npos);
  CHECK(run({"enumerate", "c33", "--bound", "40"}).code == 0);
  CHECK(run({"enumerate", "q7"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "c4", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--help"}).code == 0);
}

TEST_CASE("reports are byte-stable and the TSV is a projection of the rows") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"enumerate", "d4"},
                                                                {"tg", "q8"},
                                                                {"construct", "ring", "c8", "2xy"},
                                                                {"construct", "central", "d4", "--k", "1", "--h", "4"}}) {
    const Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto tsv_args = args;
    tsv_args.push_back("--format");
    tsv_args.push_back("tsv");
    const Run t = run(tsv_args);
    std::istringstream lines(t.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == a.report()["rows"].size() + 1);
  }
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = temp_path("out.json");
  const Run r = run({"enumerate", "c4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(json::parse(f)["brace_count"] == 2);
  std::remove(path.c_str());
}
