#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qkac/cli.hpp"

using qkac::cli::RunConfig;
using qkac::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result exec(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, std::string preset, std::optional<int> height = std::nullopt) {
  RunConfig c;
  c.command = std::move(command);
  c.preset = std::move(preset);
  c.height = height;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("qkac_cli_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("dims table") {
  const auto r = exec(config("dims", "A2", 4));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# g1\tg2\tdim\n0\t0\t1\n0\t1\t1\n1\t0\t1\n0\t2\t1\n1\t1\t2\n2\t0\t1\n0\t3\t1\n1\t2\t2\n2\t1\t2\n"
        "3\t0\t1\n0\t4\t1\n1\t3\t2\n2\t2\t3\n3\t1\t2\n4\t0\t1\n");
}

TEST_CASE("certify table") {
  const auto r = exec(config("certify", "G2", 5));
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# g1\tg2\tdim\tsign\tq_power\tfactors");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find("NA") == std::string::npos);
  }
  CHECK(rows == 21);
  CHECK(exec(config("certify", "A1", 1)).out == "# g1\tdim\tsign\tq_power\tfactors\n0\t1\t+1\t0\t-\n1\t1\t-1\t1\t1^-1 2^-1\n");
}

TEST_CASE("verify suite on affine A1") {
  auto c = config("verify", "A1~", 5);
  c.zs = {"2", "1/3"};
  const auto r = exec(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("\tfail\t") == std::string::npos);
  for (const char* name : {"nondegenerate-generic", "cyclotomic-unit-determinants", "radical-trivial",
                           "denominator-identity", "skew-invariance-s1", "skew-invariance-s2",
                           "multiplicities-match-peterson", "weyl-kac-equals-gram-rank", "casimir-scalar"}) {
    CHECK(r.out.find(std::string(name) + "\tpass") != std::string::npos);
  }
}

TEST_CASE("remaining subcommands") {
  CHECK(exec(config("info", "B2")).out.find("# symmetrizer\t2\t1") != std::string::npos);
  CHECK(exec(config("mults", "G2", 6)).code == 0);
  auto p = config("pairing", "A2", 2);
  p.gamma = "1,1";
  const auto pr = exec(p);
  CHECK(pr.code == 0);
  CHECK(pr.out.find("1\t1\te1e2\tf1f2\t") != std::string::npos);
  auto ch = config("char", "A2", 3);
  ch.weight = "1,0";
  CHECK(exec(ch).out == "# lambda [1,0]\n# g1\tg2\tcoefficient\n0\t0\t1\n0\t1\t0\n1\t0\t1\n0\t2\t0\n1\t1\t1\n2\t0\t0\n"
                        "0\t3\t0\n1\t2\t0\n2\t1\t0\n3\t0\t0\n");
  auto vc = config("verma-char", "A1", 2);
  vc.weight = "3";
  CHECK(exec(vc).code == 0);
  auto cas = config("casimir", "A1", 2);
  cas.weight = "1";
  cas.zs = {"2", "-1"};
  const auto cr = exec(cas);
  CHECK(cr.code == 0);
  CHECK(cr.out.find("1\t2\t2\t4\tpass") != std::string::npos);
  CHECK(cr.err.find("root of unity") != std::string::npos);
}

TEST_CASE("invalid input exits with status 2") {
  CHECK(exec(config("dims", "E9")).code == 2);
  CHECK(exec(config("dims", "A2", 0)).code == 2);
  CHECK(exec(config("frobnicate", "A2")).code == 2);
  auto z = config("verify", "A2", 2);
  z.zs = {"0"};
  const auto rz = exec(z);
  CHECK(rz.code == 2);
  CHECK(rz.err.find("nonzero") != std::string::npos);
  auto w = config("char", "A2", 2);
  w.weight = "1";
  CHECK(exec(w).code == 2);
  w.weight = "-1,0";
  CHECK(exec(w).err.find("dominant") != std::string::npos);
  auto p = config("verify", "A1", 2);
  p.prime = 4;
  CHECK(exec(p).code == 2);
  RunConfig none;
  none.command = "dims";
  CHECK(exec(none).code == 2);
  auto f = config("dims", "");
  f.datum_file = "/nonexistent/datum.json";
  CHECK(exec(f).code == 2);
}

TEST_CASE("datum files and output artifacts") {
  const auto dir = scratch("artifacts");
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "b2.json") << R"({"rank": 2, "cartan": [[2,-1],[-2,2]], "symmetrizer": [2,1]})";
    std::ofstream(dir / "bad.json") << R"({"rank": 2, "cartan": [[2,1],[-2,2]]})";
  }
  auto c = config("verify", "", 4);
  c.datum_file = (dir / "b2.json").string();
  c.out_dir = (dir / "run1").string();
  const auto r1 = exec(c);
  CHECK(r1.code == 0);
  c.out_dir = (dir / "run2").string();
  const auto r2 = exec(c);
  CHECK(r1.out == r2.out);
  CHECK(slurp(dir / "run1" / "verify.tsv") == r1.out);
  CHECK(slurp(dir / "run1" / "summary.json") == slurp(dir / "run2" / "summary.json"));

  const auto summary = nlohmann::json::parse(slurp(dir / "run1" / "summary.json"));
  CHECK(summary["command"] == "verify");
  CHECK(summary["H"] == 4);
  CHECK(summary["datum"]["name"] == "b2");
  CHECK(summary["datum"]["symmetrizer"] == nlohmann::json::array({2, 1}));
  REQUIRE(summary["checks"].is_array());
  for (const auto& check : summary["checks"]) {
    CHECK(check.contains("name"));
    CHECK(check.contains("detail"));
    CHECK(check["status"] != "fail");
  }

  auto bad = config("info", "");
  bad.datum_file = (dir / "bad.json").string();
  const auto rb = exec(bad);
  CHECK(rb.code == 2);
  CHECK(rb.err.find("off-diagonal") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("default height depends on the rank") {
  auto c = config("dims", "A3");
  CHECK(exec(c).out.find("\n0\t0\t5\t") == std::string::npos);
  c.out_dir = scratch("default").string();
  exec(c);
  CHECK(nlohmann::json::parse(slurp(std::filesystem::path(c.out_dir) / "summary.json"))["H"] == 4);
  std::filesystem::remove_all(c.out_dir);
  c = config("dims", "A2");
  c.out_dir = scratch("default2").string();
  exec(c);
  CHECK(nlohmann::json::parse(slurp(std::filesystem::path(c.out_dir) / "summary.json"))["H"] == 6);
  std::filesystem::remove_all(c.out_dir);
}
