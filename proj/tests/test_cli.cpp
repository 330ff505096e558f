#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flagmn/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = flagmn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("product") {
  auto r = run({"product", "--u", "1432", "--k", "2", "--hook", "1,1", "--quantum"});
  CHECK(r.code == 0);
  CHECK(r.out == "+1 2431\n+1 3412\n+1 q^(0,1,0) 1342\n+1 q^(0,1,1) 1234\n");
  for (const char* basis : {"ll-reduce", "fgp-oracle"})
    CHECK(run({"product", "--u", "1432", "--k", "2", "--lambda", "1", "--quantum", "--basis", basis}).out == r.out);
  CHECK(run({"product", "--u", "1432", "--k", "2", "--class", "s1", "--quantum"}).out == r.out);

  auto classical = run({"product", "--u", "1432", "--k", "2", "--hook", "1,1"});
  CHECK(classical.out == "+1 2431\n+1 3412\n");
  for (const char* basis : {"chains", "minimal"})
    CHECK(run({"product", "--u", "1432", "--k", "2", "--hook", "1,1", "--basis", basis}).out == classical.out);

  auto mn = run({"product", "--u", "68235741", "--k", "5", "--powersum", "4", "--quantum"});
  CHECK(mn.code == 0);
  CHECK(std::count(mn.out.begin(), mn.out.end(), '\n') == 17);
  CHECK(mn.out.find("-1 q^(0,1,1,1,2,2,1) 61234587") != std::string::npos);

  auto json = run({"product", "--u", "1432", "--k", "2", "--hook", "1,1", "--quantum", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"1342\"") != std::string::npos);
}

TEST_CASE("intervals and operators") {
  auto r = run({"interval", "--u", "1432", "--target", "3412", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1432 -> 3412") != std::string::npos);
  auto c = run({"chains", "--u", "41352", "--target", "q_{3,5} 52134", "--k", "3", "--quantum"});
  CHECK(c.code == 0);
  CHECK(run({"operators", "act", "--word", "v(5,3)", "--u", "15432", "--k", "3"}).out == "q^(0,1,1,0) 13452\n");
  CHECK(run({"operators", "act", "--word", "v(2,3)", "--u", "123", "--k", "1"}).out == "0\n");
  CHECK(run({"operators", "classify", "--word", "v(1,3) v(2,4)"}).out.find("kind zero") != std::string::npos);
  CHECK(run({"operators", "relations"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"product", "--u", "12", "--k", "5", "--hook", "1,1"}).code == 2);
  CHECK(run({"product", "--u", "1432", "--k", "2"}).code == 2);
  CHECK(run({"product", "--u", "1442", "--k", "2", "--hook", "1,1"}).code == 2);
  CHECK(run({"product", "--u", "1432", "--k", "2", "--hook", "3,1"}).code == 2);
  CHECK(run({"operators", "act", "--word", "v(2,2)", "--u", "123", "--k", "1"}).code == 2);
  CHECK(run({"reproduce", "nothing"}).code == 2);
}

TEST_CASE("reproduce") {
  auto all = run({"reproduce", "all"});
  CHECK(all.code == 0);
  for (const char* name : {"q-monk", "mn-example", "q-minimal", "figures"}) {
    CHECK(all.out.find(std::string("== ") + name + ": matches fixture") != std::string::npos);
    CHECK(flagmn::cli::reproduce_text(name) == slurp(std::filesystem::path(flagmn::cli::fixture_dir()) / (std::string(name) + ".txt")));
  }

  // a damaged fixture is a mismatch, exit 1
  auto dir = std::filesystem::temp_directory_path() / "flagmn_cli_fixtures";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "q-monk.txt") << "+1 2431\n";
  auto bad = run({"reproduce", "q-monk", "--fixtures", dir.string()});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify is deterministic across thread counts") {
  setenv("FLAGMN_THREADS", "1", 1);
  auto one = run({"verify", "all", "--n", "4"});
  setenv("FLAGMN_THREADS", "4", 1);
  auto four = run({"verify", "all", "--n", "4"});
  unsetenv("FLAGMN_THREADS");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "relations"}).code == 0);
}
