#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hurwitz/cli.hpp"
#include "json.hpp"

using namespace hurwitz;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hurwitz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hurwitz_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("compute") {
  CHECK(cli({"compute", "--a", "2", "--genus", "0", "--mu", "3,1"}).out == "3\n");
  CHECK(cli({"compute", "--a", "2", "--genus", "0", "--mu", "1,2"}).out == "0\n");
  CHECK(cli({"compute", "--a", "2", "--genus", "0", "--mu", "2", "--normalized"}).out == "1/2\n");
  const auto j = nlohmann::json::parse(cli({"compute", "--a", "2", "--mu", "3,1", "--format", "json"}).out);
  CHECK(j["value"] == "3");
  CHECK(j["schema_version"] == 1);

  CHECK(cli({"compute", "--a", "0", "--mu", "3"}).code == kExitBadInput);
  CHECK(cli({"compute", "--a", "2", "--mu", "3,-1"}).code == kExitBadInput);
  CHECK(cli({"compute", "--a", "2"}).code == kExitBadInput);
  CHECK(cli({"compute", "--a", "2", "--mu", "2", "--format", "xml"}).code == kExitBadInput);
  CHECK(cli({}).code == kExitBadInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  const auto t = cli({"verify", "theorem1", "--a", "2", "--g", "1", "--n", "1", "--samples", "5", "--tol", "1e-6",
                      "--seed", "7"});
  CHECK(t.code == kExitOk);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["pass"] == true);
  CHECK(j["samples"].size() == 5);

  CHECK(cli({"verify", "oracle", "--a", "1..3", "--max-degree", "5"}).code == kExitOk);
  CHECK(cli({"verify", "string", "--a", "2", "--g", "0", "--n", "3"}).code == kExitOk);
  CHECK(cli({"verify", "dilaton", "--a", "1,3", "--g", "1", "--n", "1..2"}).code == kExitOk);
  CHECK(cli({"verify", "fit", "--a", "3", "--g", "0", "--n", "3"}).code == kExitOk);
  CHECK(cli({"verify", "series", "--a", "2", "--order", "8"}).code == kExitOk);
  CHECK(cli({"verify", "residues", "--a", "1..2"}).code == kExitOk);

  // An impossible tolerance is a verification failure, not an input error.
  CHECK(cli({"verify", "theorem1", "--a", "1", "--g", "0", "--n", "3", "--tol", "1e-300", "--quad-points", "4"}).code ==
        kExitVerifyFailed);
  CHECK(cli({"verify", "theorem1", "--a", "2", "--g", "0", "--n", "2"}).code == kExitBadInput);
  CHECK(cli({"verify", "nonsense"}).code == kExitBadInput);
  CHECK(cli({"verify", "theorem1", "--a", "2", "--g", "0", "--n", "3", "--radius-factor", "0.7"}).code ==
        kExitBadInput);
  CHECK(cli({"verify", "oracle", "--a", "3..1"}).code == kExitBadInput);
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args{"verify", "theorem1", "--a", "3", "--g", "0", "--n", "3", "--seed", "11"};
  CHECK(cli(args).out == cli(args).out);
  const auto path = scratch("report.json");
  auto with_file = args;
  with_file.insert(with_file.end(), {"-o", path.string()});
  CHECK(cli(with_file).code == kExitOk);
  CHECK(slurp(path) == cli(args).out);
}

TEST_CASE("export") {
  const auto xi = scratch("f11.json");
  CHECK(cli({"export", "xi", "--a", "2", "--g", "1", "--n", "1", "-o", xi.string()}).code == kExitOk);
  const auto j = nlohmann::json::parse(slurp(xi));
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["r"] == std::vector<int>{2});
  CHECK(j["entries"][0]["k"] == std::vector<int>{0});
  CHECK(j["entries"][1]["k"] == std::vector<int>{1});

  const auto table = scratch("t.csv");
  CHECK(cli({"export", "table", "--a", "2", "--g", "0", "--n", "2", "--mu-max", "4", "-o", table.string()}).code ==
        kExitOk);
  const std::string csv = slurp(table);
  CHECK(csv.rfind("mu1,mu2,value\n1,1,1\n", 0) == 0);
  CHECK(csv.find("\n3,1,3/2\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);

  const auto q = scratch("q.json");
  CHECK(cli({"export", "q", "--a", "1", "--g", "0", "--n", "4", "-o", q.string()}).code == kExitOk);
  const auto qj = nlohmann::json::parse(slurp(q));
  CHECK(qj["degree_bound"] == 1);
  CHECK(qj["classes"][0]["monomials"].size() == 4);
  const std::string first = slurp(q);
  cli({"export", "q", "--a", "1", "--g", "0", "--n", "4", "-o", q.string()});
  CHECK(slurp(q) == first);

  const auto br = scratch("b.json");
  CHECK(cli({"export", "brackets", "--a", "3", "--g", "1", "--n", "1", "-o", br.string()}).code == kExitOk);
  const auto bj = nlohmann::json::parse(slurp(br));
  CHECK(bj["entries"][0]["value"] == "-1/24");
  CHECK(bj["entries"][1]["value"] == "1/8");

  CHECK(cli({"export", "q", "--a", "1", "--g", "0", "--n", "4", "-o", "/nonexistent/dir/q.json"}).code == kExitIo);
  CHECK(cli({"export", "xi", "--a", "2", "--g", "0", "--n", "2", "-o", xi.string()}).code == kExitBadInput);
  CHECK(cli({"export", "xi", "--a", "2", "--g", "1", "--n", "1"}).code == kExitBadInput);
  CHECK(cli({"export", "plot", "--a", "2", "-o", xi.string()}).code == kExitBadInput);
}
