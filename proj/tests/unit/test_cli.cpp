#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace onethree;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate, reduce and solve") {
    const fs::path dir = fs::temp_directory_path() / "onethree_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string file = (dir / "inst.txt").string();

    REQUIRE(run({"--seed", "3", "gen", "-n", "12", "-m", "8", "-o", file}).code == cli::kExitOk);
    REQUIRE(fs::exists(file));

    const Outcome red = run({"reduce", file});
    CHECK(red.code == cli::kExitOk);
    CHECK(red.out.find("free_vars") != std::string::npos);
    CHECK(red.out.find("g_set") != std::string::npos);

    const Outcome qaa = run({"qaa", file, "--layers", "10"});
    REQUIRE(qaa.code == cli::kExitOk);
    const auto doc = nlohmann::json::parse(qaa.out);
    CHECK(doc.contains("success_prob"));
    CHECK(doc.at("success_prob").get<double>() >= 0.0);

    const Outcome base = run({"baseline", file, "--method", "dpll"});
    CHECK(base.code == cli::kExitOk);
    CHECK(nlohmann::json::parse(base.out).contains("sat"));

    const Outcome res = run({"resources", "-n", "8", "-k", "5", "-m", "5", "-g", "5", "--layers", "3"});
    CHECK(res.code == cli::kExitOk);
    CHECK(res.out.find("141") != std::string::npos);
    fs::remove_all(dir);
  }

  TEST_CASE("usage errors") {
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"gen", "-n", "5", "--frobnicate"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    const Outcome v = run({"--version"});
    CHECK(v.code == cli::kExitOk);
    CHECK(v.out.find("0.1.0") != std::string::npos);
  }

  TEST_CASE("runtime errors") {
    const fs::path dir = fs::temp_directory_path() / "onethree_cli_err";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string file = (dir / "mixed.txt").string();
    write_instance_file(file, testing::make_instance(4, {{-1, 2, 3}, {2, 3, 4}}));
    const Outcome r = run({"baseline", file, "--method", "dlx"});
    CHECK(r.code == cli::kExitRuntime);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"reduce", (dir / "missing.txt").string()}).code != cli::kExitOk);
    fs::remove_all(dir);
  }
}
