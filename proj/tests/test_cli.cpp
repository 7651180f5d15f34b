#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "egh/cli.hpp"

using namespace egh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("egh_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("bound prints both bounds") {
  const auto r = run({"bound", "--n", "4", "--d", "4,5,7", "--deg", "6", "--value", "20"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("EGH bound: HF(I;7) >= 41") != std::string::npos);
  CHECK(r.out.find("Macaulay bound: HF(I;7) >= 35") != std::string::npos);
  CHECK(r.out.rfind("# config ", 0) == 0);

  const auto j = run_json({"bound", "--n", "4", "--d", "4,5,6", "--deg", "6", "--value", "20"});
  CHECK(j["result"]["egh_bound"] == 43);
  CHECK(j["config"]["value"] == 20);

  // dim S_6 = 84 in four variables, so quotient value 64 is ideal value 20
  const auto q = run_json({"bound", "--n", "4", "--d", "4,5,7", "--deg", "6", "--value", "64", "--quotient"});
  CHECK(q["result"]["egh_bound"] == 41);
  CHECK(q["result"]["quotient_egh_bound"] == 120 - 41);

  CHECK(run({"bound", "--n", "4", "--d", "4,5,7", "--deg", "6", "--value", "100"}).code == exit_infeasible);
}

TEST_CASE("coverage and verify-monomial examples") {
  const auto c = run({"coverage", "--d", "3,5,5"});
  CHECK(c.code == exit_ok);
  CHECK(c.out.find("strongest: PropCooper-(3,d,d)") != std::string::npos);

  const auto v = run({"verify-monomial", "--d", "2,2"});
  CHECK(v.code == exit_ok);
  CHECK(v.out.find("checked 6, passed 6") != std::string::npos);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  const auto unknown = run({"coverage", "--d", "2,2", "--frob"});
  CHECK(unknown.code == exit_usage);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({"coverage"}).code == exit_usage);
  CHECK(run({"coverage", "--d", "2,x"}).code == exit_usage);
  CHECK(run({"lpp", "--d", "2,2"}).code == exit_usage);
  CHECK(run({"verify-random", "--d", "2,2", "--prime", "15"}).code == exit_usage);
  CHECK(run({"coverage", "--help"}).code == exit_ok);
}

TEST_CASE("unsorted d is sorted with a warning") {
  const auto r = run({"coverage", "--d", "5,3,5"});
  CHECK(r.code == exit_ok);
  CHECK(r.err.find("warning: degree sequence sorted to (3,5,5)") != std::string::npos);
  CHECK(r.out.find("\"d\":[3,5,5]") != std::string::npos);
}

TEST_CASE("hf documents round-trip") {
  const auto lpp = run_json({"lpp", "--n", "3", "--d", "2,2", "--values", "0,1,4,10"});
  REQUIRE(lpp["result"]["feasible"] == true);
  const auto hf = lpp["result"]["lpp"]["hf"];
  CHECK(hf == nlohmann::json::parse(R"({"n":3,"d":[2,2],"side":"ideal","hf":{"0":0,"1":1,"2":4,"3":10}})"));

  const auto path = temp_file("hf.json", hf.dump());
  const auto check = run_json({"egh-check", "--hf", path.string()});
  CHECK(check["result"]["holds"] == true);
  CHECK(check["result"]["witness"]["hf"] == hf);
  CHECK(check["result"]["witness"]["generators"] == lpp["result"]["lpp"]["generators"]);

  const auto doc = hf_from_json(hf);
  CHECK(hf_to_json(doc.table, doc.d) == hf);
  CHECK_THROWS_AS(hf_from_json(nlohmann::json::parse(R"({"n":2,"hf":{"0":1,"2":3}})")), Error);
  CHECK_THROWS_AS(hf_from_json(nlohmann::json::parse(R"({"n":2,"side":"both","hf":{"0":1}})")), Error);
  CHECK_THROWS_AS(hf_from_json(nlohmann::json::parse(R"({"hf":{"0":1}})")), Error);

  const auto bad = temp_file("bad.json", "{not json");
  CHECK(run({"egh-check", "--hf", bad.string(), "--d", "2,2"}).code == exit_usage);
}

TEST_CASE("infeasible tables exit 1") {
  const auto r = run({"egh-check", "--n", "3", "--d", "2,2,2", "--values", "0,0,2,3"});
  CHECK(r.code == exit_infeasible);
  CHECK(r.out.find("below-ci") != std::string::npos);
  CHECK(run({"lpp", "--n", "3", "--d", "2,2", "--values", "0,1,3,6"}).code == exit_infeasible);
}

TEST_CASE("linkage command") {
  const auto q = temp_file("q.txt", "x1\nx2\n");
  const auto j = run_json({"linkage", "--d", "2,2", "--ideal", q.string()});
  CHECK(j["result"]["holds"] == true);
  CHECK(j["result"]["linked"]["hf"] == nlohmann::json::parse(R"({"0":1,"1":2,"2":0})"));
  CHECK(j["result"]["linked"]["side"] == "quotient");

  const auto t = run_json({"linkage", "--d", "2,2", "--values", "1,1,0", "--quotient"});
  CHECK(t["result"]["linked"]["hf"] == nlohmann::json::parse(R"({"0":1,"1":1,"2":0})"));
  CHECK(run({"linkage", "--d", "2,2", "--values", "1,2,2", "--quotient"}).code == exit_infeasible);
}

TEST_CASE("pipeline command") {
  const auto all = run({"pipeline", "--d", "2,4,4"});
  // check (a) fails on some admissible inputs
  CHECK(all.code == exit_verification_failure);
  CHECK(all.out.find("16 admissible inputs") != std::string::npos);
  CHECK(run({"pipeline", "--d", "2,4,5"}).code == exit_infeasible);

  const auto unit = run_json({"pipeline", "--d", "2,2,2", "--values", "1,3,6"});
  CHECK(unit["result"]["u"] == "x1");
  const auto q = temp_file("pq.txt", "x1^2\nx2^2\nx1*x2\nx3\n");
  CHECK(run({"pipeline", "--d", "2,2,2", "--ideal", q.string()}).code == exit_ok);
}

TEST_CASE("verify-random JSON does not depend on jobs") {
  auto strip = [](nlohmann::json j) {
    j.erase("runtime");
    return j.dump();
  };
  const std::vector<std::string> base{"verify-random", "--d", "2,3,5", "--samples", "24", "--seed", "9"};
  auto with_jobs = [&](const char* k) {
    auto args = base;
    args.insert(args.end(), {"--jobs", k});
    return strip(run_json(args));
  };
  const auto one = with_jobs("1");
  CHECK(with_jobs("2") == one);
  CHECK(with_jobs("8") == one);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["result"]["checked"] == 24);
  CHECK(j["result"]["passed"] == 24);
  CHECK(j["config"]["seed"] == 9);
}

TEST_CASE("EGH_PRIME sets the default prime") {
  ::setenv("EGH_PRIME", "101", 1);
  const auto j = run_json({"verify-random", "--d", "2,2", "--samples", "5"});
  CHECK(j["config"]["prime"] == 101);
  const auto explicit_p = run_json({"verify-random", "--d", "2,2", "--samples", "5", "--prime", "103"});
  CHECK(explicit_p["config"]["prime"] == 103);
  ::unsetenv("EGH_PRIME");
}
