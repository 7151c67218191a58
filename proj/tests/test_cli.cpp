#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sturmian/cli.hpp"

using namespace sturmian;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cf table") {
  Result r = call({"cf", "--alpha", "rat:3/7"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("# config: cf --alpha rat:3/7", 0) == 0);
  CHECK(r.out.find("k,a,p,q,theta_num,theta_den,theta_float") != std::string::npos);
  CHECK(r.out.find("\n1,2,1,2,") != std::string::npos);
  CHECK(r.out.find("\n2,3,3,7,0,1,0") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"count", "--alpha", "preset:golden-40", "--x", "rat:1/3", "--N", "80"}).status == 0);
  Result bad = call({"count", "--alpha", "preset:golden-20", "--x", "rat:1/3", "--N", "100000"});
  CHECK(bad.status == 2);
  CHECK(bad.err.rfind("error[E_HORIZON]", 0) == 0);
  Result unknown = call({"frobnicate"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.rfind("error[E_CONFIG]", 0) == 0);
  CHECK(call({"cf", "--alpha", "cf:1,x"}).status == 2);
  CHECK(call({"thmB", "--m", "1"}).status == 2);
  Result help = call({"count", "--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("--dump-per-j") != std::string::npos);
}

TEST_CASE("count payload") {
  Result r = call({"count", "--alpha", "preset:golden-40", "--x", "1/3", "--N", "80"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"count\": 5") != std::string::npos);
  CHECK(r.out.find("\"x\"") != std::string::npos);
  CHECK(r.out.find("rat:1/3") != std::string::npos);
}

TEST_CASE("canonical config round-trips") {
  std::vector<std::vector<std::string>> lines{
      {"cf", "--alpha", "cf:3,1,4", "--tail", "77"},
      {"count", "--alpha", "preset:silver-10", "--x", "0.25", "--N", "40", "--jobs", "3"},
      {"targets", "--N", "12"},
      {"verify", "--alpha", "preset:golden-20", "--oracle-max", "100"},
      {"thmA", "--checkpoints", "q5,q10", "--samples", "4"},
      {"thmB", "--C", "500", "--oscillation"},
      {"mc-wn", "--n", "20", "--samples", "50", "--seed", "9"},
      {"mc-bigtime", "--growth", "--format", "csv"},
  };
  for (const auto& args : lines) {
    std::string once = canonical(parse_args(args));
    CAPTURE(once);
    auto words = split(once);
    std::string twice = canonical(parse_args(words));
    CHECK(once == twice);
    CHECK(once.find("--jobs") == std::string::npos);
  }
}

TEST_CASE("output files") {
  auto dir = std::filesystem::temp_directory_path() / "sturmian_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv("STURMIAN_OUT_DIR", dir.c_str(), 1);
  Result r = call({"count", "--alpha", "preset:golden-20", "--x", "1/3", "--N", "30", "--out", "c.json",
                   "--dump-per-j", "rows.csv"});
  ::unsetenv("STURMIAN_OUT_DIR");
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  CHECK(slurp(dir / "c.json").find("\"count\"") != std::string::npos);
  std::string rows = slurp(dir / "rows.csv");
  std::size_t lines = 0;
  for (char ch : rows) lines += ch == '\n';
  CHECK(lines >= 31);
  CHECK(rows.find("j,depth,i,b,r,s,t,lambda_num") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("thmA checkpoints by convergent index") {
  Result r = call({"thmA", "--alpha", "preset:golden-40", "--x", "1/3", "--checkpoints", "q10,q20", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"N\": 88") != std::string::npos);
  CHECK(r.out.find("\"N\": 10945") != std::string::npos);
  CHECK(call({"thmA", "--checkpoints", "q99"}).status == 2);
}

TEST_CASE("jobs do not change payloads") {
  std::vector<std::vector<std::string>> lines{
      {"thmA", "--checkpoints", "q10,q15", "--samples", "12"},
      {"mc-wn", "--n", "10", "--samples", "300"},
      {"mc-bigtime", "--n", "20", "--samples", "300"},
      {"verify", "--alpha", "cf:2,1,3,1,1,2", "--oracle-max", "100"},
  };
  for (auto args : lines) {
    Result one = call(args);
    args.push_back("--jobs");
    args.push_back("3");
    Result three = call(args);
    CAPTURE(args.front());
    CHECK(one.status == three.status);
    CHECK(one.out == three.out);
  }
}
