#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "chowcob/cli/cli.hpp"

using chowcob::cli::run;
using nlohmann::json;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = call(args);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("schema") == 1);
  return j;
}

}  // namespace

TEST_CASE("dickson") {
  auto j = call_json({"dickson", "--n", "2", "--p", "2", "--verify"});
  CHECK(j.at("ok") == true);
  CHECK(j.at("c").at("1") == "y1^2 + y1*y2 + y2^2");
}

TEST_CASE("graded module output") {
  auto j = call_json({"graded", "--key", "g2_twisted", "--range", "0..6"});
  CHECK(j.at("module").at("free_total") == 12);
  CHECK(j.at("module").at("torsion_total") == 6);
  auto t = call({"graded", "--key", "g2_twisted", "--range", "0..6"});
  CHECK(t.code == 0);
  CHECK(t.out.find("total: free 12, torsion 6") != std::string::npos);
}

TEST_CASE("rost and morava") {
  auto j = call_json({"rost", "--n", "3", "--p", "2", "--morava", "2"});
  CHECK(j.at("module").at("free_total") == 2);
}

TEST_CASE("quadric") {
  auto j = call_json({"quadric", "--pfister-max", "2"});
  CHECK(j.at("J_partition") == true);
  CHECK(j.at("cross_checks_agree") == true);
  CHECK(j.at("module").at("free_total") == 6);
}

TEST_CASE("so-image and e8check") {
  auto j = call_json({"so-image", "--m", "11"});
  CHECK(j.at("hit").at("5") == true);
  CHECK(j.at("hit").at("3") == false);
  CHECK(call({"e8check"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"bogus"}).code == 1);
  CHECK(call({"graded", "--key", "g2_twisted"}).code == 1);
  CHECK(call({"degv", "--file", "/nonexistent/file.json"}).code == 1);
  CHECK(call({"dickson", "--n", "2", "--p", "4"}).code == 1);
}
