#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cluster::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand") {
    Run r = run({"expand", "--type", "A", "--rank", "2", "--root", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x2 + 1) / x1\n");
    Run j = run({"expand", "--type", "A", "--rank", "3", "--root", "1,1,1", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["matching_polynomial"] == "x1*x3 + x2^2 + 2*x2 + 1");
  }

  TEST_CASE("roots") {
    Run r = run({"roots", "--type", "G2", "--rank", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 6);
    for (const auto& p : doc) CHECK(p.size() == 2);
  }

  TEST_CASE("verify") {
    Run r = run({"verify", "--type", "A", "--rank", "3", "--checks", "all"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == "pass");
    bool found = false;
    for (const auto& c : doc["checks"])
      if (c["summary"] == "6 roots checked") found = true;
    CHECK(found);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({"roots", "--type", "E", "--rank", "6"}).code == 2);
    CHECK(run({"roots", "--type", "D", "--rank", "3"}).code == 2);
    CHECK(run({"expand", "--type", "A", "--rank", "3", "--root", "1,0,1"}).code == 2);
    CHECK(run({"expand", "--type", "A", "--rank", "3", "--root", "1,x"}).code == 2);
    CHECK(run({"verify", "--checks", "nonsense"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("repeated runs are identical") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"belt", "--type", "D", "--rank", "5"},
             {"variables", "--type", "B", "--rank", "4", "--format", "text"},
             {"graphs", "--type", "G2"},
             {"verify", "--type", "C", "--rank", "3", "--jobs", "4"}}) {
      Run a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
