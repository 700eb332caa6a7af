#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using scarf_cli::RunConfig;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "scarf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  RunConfig config;
  std::ostringstream out, err;
  Result r;
  if (auto code = scarf_cli::parse(static_cast<int>(argv.size()), argv.data(), config, out, err)) {
    r.code = *code;
  } else {
    r.code = scarf_cli::run(config, out, err);
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("decompose examples") {
  const auto one = invoke({"decompose", "--N", "1", "--ell", "0", "--format", "json"});
  REQUIRE(one.code == 0);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["c"] == nlohmann::json::parse(R"({"0": ["1/1"]})"));
  CHECK(j["schema"] == 1);

  const auto two = nlohmann::json::parse(invoke({"decompose", "--N", "2", "--ell", "0"}).out);
  CHECK(two["c"]["0"] == nlohmann::json::array({"0/1", "-1/1"}));
  CHECK(two["c"]["1"] == nlohmann::json::array({"3/4"}));

  const auto csv = invoke({"decompose", "--N", "2", "--ell", "0", "--format", "csv", "--b", "0.5"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("0,1,-b,-1/2,-0.5\n") != std::string::npos);
}

TEST_CASE("audit example") {
  const auto r = invoke({"audit", "--N", "3", "--d", "2", "--b", "0.5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_multiplicity"] == 9);
  CHECK(j["pass"] == true);
}

TEST_CASE("verification failures exit 1") {
  const auto r = invoke({"audit", "--N", "3", "--b", "0.5", "--grid", "16"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["pass"] == false);
}

TEST_CASE("usage errors exit 2 and name the flag") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"decompose", "--N", "2", "--ell", "2"}, "--ell"},
      {{"decompose", "--N", "0", "--ell", "0"}, "--N"},
      {{"spectrum", "--b", "1/3"}, "--b"},
      {{"spectrum", "--b", "0.3", "--grid", "8"}, "--grid"},
      {{"spectrum", "--b", "abc"}, "--b"},
      {{"gram", "--N-list", "1,2", "--ell", "1", "--b", "0"}, "--N-list"},
      {{"verify", "--which", "magic", "--N", "2", "--ell", "0"}, "--which"},
      {{"verify", "--which", "gradient", "--N", "2", "--ell", "0", "--b", "1/2"}, "--b"},
      {{"decompose", "--N", "2", "--ell", "0", "--format", "xml"}, "--format"},
      {{"spectrum"}, "--b"},
      {{}, "subcommand"},
  };
  for (const auto& [args, flag] : cases) {
    const auto r = invoke(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(r.err.find(flag) != std::string::npos);
  }
  CHECK(invoke({"spectrum", "--b", "7"}).code == 2);  // non-normalizable
}

TEST_CASE("exact b where the backend is exact") {
  CHECK(invoke({"verify", "--which", "polynomial", "--N", "4", "--ell", "1", "--b", "2/7"}).code == 0);
  CHECK(invoke({"verify", "--which", "ledger", "--N", "4", "--ell", "1", "--b", "-3/5"}).code == 0);
  CHECK(invoke({"verify", "--which", "gradient", "--N", "4", "--ell", "1", "--b", "0.3"}).code == 0);
  CHECK(invoke({"verify", "--which", "commutator", "--N", "4", "--ell", "1", "--b", "0.5"}).code == 0);
}

TEST_CASE("spectrum and gram outputs") {
  const auto s = invoke({"spectrum", "--d", "2", "--channel", "0", "--b", "0.9", "--grid", "500", "--count", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("index,eigenvalue_raw,eigenvalue_richardson\n0,", 0) == 0);
  const auto sj = nlohmann::json::parse(
      invoke({"spectrum", "--b", "0.3", "--grid", "500", "--count", "2", "--format", "json"}).out);
  CHECK(sj["eigenvalues"][1]["eigenvalue_richardson"].get<double>() == doctest::Approx(4.0).epsilon(1e-6));

  const auto g = invoke({"gram", "--N-list", "2,3,4", "--ell", "1", "--b", "0.4", "--d", "2"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("N,2,3,4\n", 0) == 0);
  const auto gj = nlohmann::json::parse(
      invoke({"gram", "--N-list", "2,3", "--ell", "1", "--b", "0.4", "--measure", "cos", "--format", "json"}).out);
  CHECK(gj["normalized"][0][0].get<double>() == doctest::Approx(1.0));
  CHECK(gj["pass"] == true);
}

TEST_CASE("table of closed forms") {
  const auto r = invoke({"table", "--N", "7"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["all_match"] == true);
  CHECK(invoke({"table", "--N", "7", "--format", "csv"}).out.rfind("row,ell,K,expected,computed,match\n", 0) == 0);
}

TEST_CASE("identical configs give identical bytes") {
  const std::vector<std::vector<std::string>> configs{
      {"decompose", "--N", "6", "--ell", "2", "--b", "1/3"},
      {"spectrum", "--b", "0.3", "--grid", "300", "--count", "3"},
      {"audit", "--N", "2", "--b", "0.5", "--grid", "300"},
      {"verify", "--which", "commutator", "--N", "3", "--ell", "1", "--b", "0.5"},
      {"gram", "--N-list", "1,2,3", "--ell", "0", "--b", "0.9"},
  };
  for (const auto& c : configs) CHECK(invoke(c).out == invoke(c).out);
}

TEST_CASE("output file honours SCARF_OUTPUT_DIR") {
  const auto dir = std::filesystem::temp_directory_path() / "scarf_cli_test";
  std::filesystem::remove_all(dir);
  setenv("SCARF_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = invoke({"decompose", "--N", "1", "--ell", "0", "--output", "sub/one.json"});
  unsetenv("SCARF_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(dir / "sub" / "one.json");
  REQUIRE(f.good());
  const auto j = nlohmann::json::parse(f);
  CHECK(j["N"] == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("help and version exit 0") {
  const auto h = invoke({"verify", "--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("N^2 c_K") != std::string::npos);
  CHECK(invoke({"--version"}).code == 0);
}
