#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "homq/frt.hpp"

using namespace homq;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(HOMQ_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(HOMQ_DATA) + "/" + file; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "homq_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool all_pass(const json& report) {
  for (const auto& c : report.at("checks"))
    if (c.at("status") == "fail") return false;
  return !report.at("checks").empty();
}

}  // namespace

TEST_CASE("verify a named instance") {
  unsetenv("HOMQ_DEFAULT_DEGREE");
  Run r = cli("verify mq2 --param lambda=3 --degree 3");
  CHECK(r.code == 0);
  json j = r.doc();
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["lambda"] == "3");
  CHECK(all_pass(j));
}

TEST_CASE("frt build") {
  Run r = cli("frt build " + data("sl2.json") + " --lambda t,1");
  REQUIRE(r.code == 0);
  json j = r.doc();
  CHECK(j["relations_retained"] == 6);
  CHECK(j["algebra"]["rules"].size() == 6);
  CHECK(j["algebra"]["generators"] == json({"a", "b", "c", "d"}));

  Run y = cli("frt ybe " + data("mq11.json"));
  CHECK(y.code == 0);
  CHECK(all_pass(y.doc()));
}

TEST_CASE("hybe emits the c-tensor") {
  Run r = cli("hybe mq2 --comodule frt --degree 1 --emit-matrix");
  REQUIRE(r.code == 0);
  json j = r.doc();
  std::ifstream in(data("sl2.json"));
  RMatrixSpec spec = rmatrix_from_json(json::parse(in));
  Mat gamma = spec.gamma();
  REQUIRE(j["matrix"].size() == 4);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) CHECK(j["matrix"][row][col] == gamma(row, col).str());
  CHECK(all_pass(j));
}

TEST_CASE("hybe on a plane named by kind") {
  Run r = cli("hybe mq2 --comodule plane:standard --degree 2 --emit-matrix");
  REQUIRE(r.code == 0);
  json j = r.doc();
  CHECK(j["instance"] == "plane_standard");
  CHECK(j["basis"] == json({"xx", "xy", "yy"}));
  CHECK(j["matrix"].size() == 9);
  CHECK(cli("hybe mq2 --comodule plane:mixed").code == 2);
}

TEST_CASE("dualize round trip through files") {
  auto inst = scratch("uq.json"), dual = scratch("uq_dual.json"), back = scratch("uq_back.json");
  REQUIRE(cli("emit uq_small --what instance --out " + inst.string()).code == 0);
  Run d = cli("dualize " + inst.string() + " --out " + dual.string());
  CHECK(d.code == 0);
  Run v = cli("verify " + dual.string());
  CHECK(v.code == 0);
  CHECK(all_pass(v.doc()));
  REQUIRE(cli("dualize " + dual.string() + " --out " + back.string()).code == 0);
  CHECK(json::parse(slurp(back))["dual"] == json::parse(slurp(inst))["findim"]);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"verify anyon --degree 2", "hybe plane_fermionic --comodule plane --emit-matrix",
                           "emit glq2 --what instance"}) {
    CAPTURE(args);
    Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("out flag writes the same document") {
  auto path = scratch("report.json");
  std::filesystem::remove(path);
  Run to_file = cli("emit mq2 --what determinant --out " + path.string());
  CHECK(to_file.code == 0);
  CHECK(slurp(path) == cli("emit mq2 --what determinant").out);
}

TEST_CASE("exit codes and error objects") {
  auto kind = [](const Run& r) { return r.doc()["error"]["kind"].get<std::string>(); };

  Run unknown = cli("verify sl3");
  CHECK(unknown.code == 2);
  CHECK(kind(unknown) == "unknown_instance");

  auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\"dim\": 2, ";
  Run malformed = cli("frt build " + broken.string());
  CHECK(malformed.code == 2);
  CHECK(kind(malformed) == "malformed_json");

  Run param = cli("verify mq2 --param lambda=0");
  CHECK(param.code == 2);
  CHECK(kind(param) == "parameter");

  Run usage = cli("frobnicate");
  CHECK(usage.code == 2);

  // a file instance with a corrupted R value verifies with a failing report
  json inst = cli("emit mq2 --what instance").doc();
  for (auto& e : inst["R"]["gen_table"])
    if (e["left"] == "b" && e["right"] == "c") e["value"] = "0";
  auto path = scratch("corrupted.json");
  std::ofstream(path) << inst.dump();
  Run bad = cli("verify " + path.string() + " --degree 2");
  CHECK(bad.code == 1);
  json rep = bad.doc();
  CHECK(rep["status"] == "fail");
  bool almost = false;
  for (const auto& c : rep["checks"])
    if (c["name"] == "cobraided/almost_commutativity") almost = c["status"] == "fail" && !c["witness"].is_null();
  CHECK(almost);
}

TEST_CASE("default degree from the environment") {
  setenv("HOMQ_DEFAULT_DEGREE", "1", 1);
  Run r = cli("verify mq11");
  unsetenv("HOMQ_DEFAULT_DEGREE");
  REQUIRE(r.code == 0);
  json j = r.doc();
  CHECK(j["degree"] == 1);
  // the confluence certificate always runs at the rewriting degree
  for (const auto& c : j["checks"])
    if (c["name"] != "presentation/local_confluence") CHECK(c["degree"].get<int>() <= 1);

  Run explicit_degree = cli("verify mq11 --degree 2");
  CHECK(explicit_degree.doc()["degree"] == 2);
}
