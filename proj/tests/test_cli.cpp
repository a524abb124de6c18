#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "catalog.hpp"
#include "doctest.h"
#include "subdepth/cache.hpp"
#include "subdepth/cli.hpp"
#include "subdepth/error.hpp"
#include "subdepth/serialize.hpp"

using namespace subdepth;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("subdepth-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

cli::Result run(std::vector<std::string> args) {
  args.push_back("--no-cache");
  return cli::run(args);
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("depth subcommand") {
  CHECK(run_json({"depth", "S(3)", "perm(3; (1 2))"})["depth"]["d"] == 3);
  CHECK(run_json({"depth", "S(4)", "S(4)"})["depth"]["d"] == 1);
  CHECK(run_json({"depth", "S(4)", "S(3)"})["depth"]["d"] == 5);
  const auto d8 = run_json({"depth", "S(4)", "D(8)"});
  CHECK(d8["depth"]["d"] == 4);
  CHECK(d8["normal"] == false);
  const auto text = run({"depth", "S(3)", "perm(3; (1 2))"});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("depth.d: 3\n") != std::string::npos);
  const auto csv = run({"depth", "S(3)", "perm(3; (1 2))", "--format", "csv"});
  CHECK(csv.out.find("depth.d,3\n") != std::string::npos);
  CHECK(csv.out.find("# M\n1,0,1\n0,1,1\n") != std::string::npos);
}

TEST_CASE("certificates are optional") {
  const auto plain = run_json({"depth", "S(3)", "S(2)"});
  CHECK(!plain["depth"].contains("certificates"));
  const auto with = run_json({"depth", "S(3)", "S(2)", "--certificate"});
  const auto report = depth_report_from_json(with["depth"]);
  CHECK(report.depth_certificate.verify());
  CHECK(to_json(report, {true}) == with["depth"]);
}

TEST_CASE("other subcommands") {
  const auto dbl = run_json({"double", "G108"});
  CHECK(dbl["double"]["ell_Q"] == 2);
  CHECK(dbl["double"]["d"] == 5);
  CHECK(dbl["double"]["classes"] == 15);
  CHECK(run_json({"double", "D(8)"})["double"]["ell_Q"].is_null());
  CHECK(run_json({"diag", "S(3)"})["diagonal"]["depth"]["d"] == 3);
  CHECK(run_json({"classes", "S(4)"})["classes"].size() == 5);
  CHECK(run_json({"chartab", "S(4)"})["characters"].size() == 5);
  CHECK(run_json({"module-depth", "S(4)", "D(8)"})["module"]["depth"] == 1);
  const auto chain = run_json({"chain", "S(4)", "S(3)"});
  CHECK(chain["chain"]["kernel_matches"] == true);
  CHECK(chain["burnside_brauer"]["holds"] == true);
  const auto corefree = run_json({"corefree", "S(4)", "D(8)"});
  CHECK(corefree["corefree"]["quotient"]["d"] == 3);
  CHECK(corefree["corefree"]["core_order"] == 4);
  CHECK(run({"chartab", "S(3)"}).out.find("X.3: 2 0 -1") != std::string::npos);
}

TEST_CASE("user errors exit with 2") {
  const auto not_sub = run({"depth", "A(4)", "perm(4; (1 2), (1 2 3))"});
  CHECK(not_sub.exit_code == 2);
  CHECK(not_sub.err.find("(1 2)") != std::string::npos);
  CHECK(run({"depth", "S(3)", "S(4)"}).exit_code == 2);
  CHECK(run({"classes", "S(4"}).exit_code == 2);
  CHECK(run({"classes", "perm(3; (1 2 3 4))"}).exit_code == 2);
  CHECK(run({"classes", "S(9)", "--order-cap", "1000"}).exit_code == 2);
  CHECK(run({"classes"}).exit_code == 2);
  CHECK(run({"frobnicate", "S(3)"}).exit_code == 2);
  CHECK(run({"classes", "S(3)", "--format", "xml"}).exit_code == 2);
  CHECK(run({"cartan", "/nonexistent/file.json"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("cartan subcommand") {
  const auto dir = fresh_dir("cartan");
  const auto file = dir / "tri.json";
  std::ofstream(file) << to_json(triangular_example(3)).dump();
  const auto all = run_json({"cartan", file.string()});
  CHECK(all["validation"]["ok"] == true);
  CHECK(all["conditions"][0]["holds"] == true);
  const auto one = run_json({"cartan", file.string(), "--n", "1", "--parity", "even"});
  CHECK(one["conditions"].size() == 1);
  CHECK(one["conditions"][0]["tested_depth"] == 2);
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK(run({"cartan", (dir / "bad.json").string()}).exit_code == 2);
  auto shape = to_json(triangular_example(3));
  shape["C"] = Json::array({Json::array({1})});
  std::ofstream(dir / "shape.json") << shape.dump();
  CHECK(run({"cartan", (dir / "shape.json").string(), "--n", "1"}).exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("character table JSON round trip") {
  for (const auto& g : testcat::groups()) {
    const auto t = character_table(g);
    const Json j = to_json(t);
    const auto back = table_from_json(Json::parse(j.dump()), g);
    CHECK(back.irreducibles == t.irreducibles);
    CHECK(back.degrees == t.degrees);
    CHECK(back.conductor == t.conductor);
    CHECK(to_json(back) == j);
  }
  const auto t = character_table(builtin::symmetric(3));
  CHECK_THROWS_AS(table_from_json(to_json(t), builtin::symmetric(4)), Error);
}

TEST_CASE("cache is transparent and self-healing") {
  const auto dir = fresh_dir("cache");
  const std::vector<std::string> args = {"double", "S(4)", "--format", "json", "--cache-dir", dir.string()};
  const auto uncached = run({"double", "S(4)", "--format", "json"});
  const auto cold = cli::run(args);
  const auto warm = cli::run(args);
  CHECK(cold.exit_code == 0);
  CHECK(cold.out == uncached.out);
  CHECK(warm.out == uncached.out);

  TableCache cache(dir);
  const auto g = builtin::symmetric(4);
  const auto path = *cache.path_for(g);
  REQUIRE(fs::exists(path));
  cache.get(g);
  CHECK(cache.stats().disk_hits == 1);

  // corrupt a value: the entry must be discarded, not trusted
  Json j = Json::parse(std::ifstream(path));
  j["characters"][1][1] = 7;
  std::ofstream(path) << j.dump();
  TableCache second(dir);
  const auto table = second.get(g);
  CHECK(second.stats().discarded == 1);
  CHECK(second.stats().computed == 1);
  CHECK(table.irreducibles == character_table(g).irreducibles);
  CHECK(cli::run(args).out == uncached.out);

  std::ofstream(path) << "garbage";
  CHECK(cli::run(args).out == uncached.out);
  fs::remove_all(dir);
}

TEST_CASE("output does not depend on thread count") {
  const auto one = run({"depth", "S(5)", "S(4)", "--format", "json", "--threads", "1", "--certificate"});
  const auto four = run({"depth", "S(5)", "S(4)", "--format", "json", "--threads", "4", "--certificate"});
  CHECK(one.out == four.out);
}
