#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "kr");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = kr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("set lists weights with grades") {
    const auto r = run({"set", "--algebra", "C3", "--node", "2", "--level", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["weight"] == nlohmann::json::array({0, 2, 0}));
    CHECK(j[0]["grade"] == 0);
    CHECK(j[2]["weight"] == nlohmann::json::array({0, 0, 0}));
    CHECK(j[2]["grade"] == 2);
  }

  TEST_CASE("char reports graded pieces and the dimension polynomial") {
    const auto r = run({"char", "--algebra", "B4", "--node", "3", "--level", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"algebra", "twisted", "acting_algebra", "node", "level", "grades", "dimension_polynomial",
                            "total_dim"})
      CHECK(j.contains(key));
    CHECK(j["dimension_polynomial"] == nlohmann::json::array({84, 9}));
    CHECK(j["total_dim"] == 93);
    CHECK(j["twisted"] == false);
    const auto& g1 = j["grades"][1];
    CHECK(g1["grade"] == 1);
    CHECK(g1["dim"] == 9);
    CHECK(g1["constituents"][0]["multiplicity"] == 1);
    CHECK(g1["constituents"][0]["dim"] == 9);
  }

  TEST_CASE("twisted algebras via suffix or flag") {
    const auto a = run({"char", "--algebra", "D4~", "--node", "2", "--level", "1"});
    const auto b = run({"char", "--algebra", "D4", "--twisted", "--node", "2", "--level", "1"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["twisted"] == true);
    CHECK(j["dimension_polynomial"] == nlohmann::json::array({21, 7, 1}));
  }

  TEST_CASE("invalid input exits with code 2") {
    CHECK(run({"set", "--algebra", "E6", "--node", "1", "--level", "1"}).code == 2);
    CHECK(run({"set", "--algebra", "C3", "--node", "4", "--level", "1"}).code == 2);
    CHECK(run({"set", "--algebra", "C3", "--node", "1", "--level", "-1"}).code == 2);
    CHECK(run({"char", "--algebra", "C3~", "--node", "1", "--level", "1"}).code == 2);
    CHECK(run({"set", "--algebra", "C3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
  }

  TEST_CASE("verify prints a summary and exits 0 when everything passes") {
    const auto r = run({"verify", "chains", "--max-rank", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  ") != std::string::npos);
    CHECK(r.out.find("FAIL  ") == std::string::npos);
    CHECK(r.out.find(" failed") != std::string::npos);
  }

  TEST_CASE("verify restricted to one algebra") {
    const auto r = run({"verify", "homs", "--algebra", "C3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C3") != std::string::npos);
  }
}
