#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("ETM_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string example(const char* name) { return std::string(ETM_DATA_DIR) + "/examples/" + name; }

// Runs a shell pipeline with $E bound to the CLI binary.
Run run(const std::string& cmd) {
  std::string full = "E='" + bin() + "'; " + cmd + " 2>/dev/null";
  FILE* p = popen(full.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& cmd) {
  auto r = run(cmd);
  CHECK(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("classify and transform") {
  CHECK(run_json("$E classify " + example("basic_2Pex.json")) != "2Pex");
  CHECK(run_json("$E op dual " + example("tetra.json") + " | $E classify -") == "1");
  CHECK(run_json("$E basic 2 | $E op petrie - | $E op petrie - | $E classify -") ==
        run_json("$E basic 2 | $E classify -"));
  auto j = run_json("$E op join " + example("tetra.json") + " " + example("tetra.json"));
  CHECK(j["flags"] == 24);
}

TEST_CASE("info on the pinned PSL(2, 11) map") {
  auto j = run_json("$E info " + example("n46_3.json"));
  CHECK(j["V"] == 55);
  CHECK(j["E"] == 165);
  CHECK(j["F"] == 66);
  CHECK(j["chi"] == -44);
  CHECK(j["flags"] == 660);
  CHECK(j["orientable_no_boundary"] == false);
  CHECK(j["class"] == "1");
}

TEST_CASE("build, realize and search") {
  auto spec = run_json("$E realize --family sym --n 6 --class 2Pex");
  CHECK(spec["realizable"] == true);
  std::string s = spec["realization"]["spec"].dump();
  std::ofstream("cli_spec.json") << s;
  auto info = run_json("$E build --spec cli_spec.json | $E info -");
  CHECK(info["flags"] == 1440);
  CHECK(info["class"] == "2Pex");
  CHECK(info["orientable_no_boundary"] == true);
  // The other member of the orbit through the same spec.
  CHECK(run_json("$E build cli_spec.json --as 2sex | $E classify -") == "2sex");

  auto l7 = run_json("$E realize psl2 -q 7 --class 2ex");
  CHECK(l7["realizable"] == false);

  auto r = run_json("echo '{\"family\": \"sym\", \"n\": 5}' | $E search --group - --class 2Pex --exhaustive");
  CHECK(r["witnesses"].empty());
  CHECK(r["proved_empty"] == true);
  // Byte-stable across thread counts.
  std::ofstream("cli_a5.json") << R"({"family": "alt", "n": 5})";
  auto one = run("$E search --threads 1 --class 1 --group cli_a5.json");
  CHECK(one.code == 0);
  CHECK(one.out == run("$E --threads 3 search --class 1 --group cli_a5.json").out);
}

TEST_CASE("verify") {
  auto j = run_json("$E verify basic-maps");
  CHECK(j["status"] == "pass");
  CHECK(j["failed"] == 0);
  auto md = run("$E verify small-sn --format md");
  CHECK(md.code == 0);
  CHECK(md.out.find("## small-sn: pass") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("$E classify /nonexistent.json").code == 2);
  CHECK(run("echo '{\"flags\": 2' | $E classify -").code == 2);
  CHECK(run("echo '{\"flags\": 3, \"r0\": [1,2,0], \"r1\": [0,1,2], \"r2\": [0,1,2]}' | $E info -").code == 2);
  CHECK(run("$E basic 7").code == 2);
  CHECK(run("echo '{\"family\": \"sym\", \"n\": 4}' | $E search --group - --class 2s").code == 2);
  CHECK(run("$E verify no-such-suite").code == 2);
  CHECK(run("$E frobnicate").code == 2);
  CHECK(run("$E --cap 100 realize --family sym --n 7 --class 1 --map").code == 1);
  CHECK(run("$E basic 3").code == 0);
  // Computed verdicts disagree with the catalog in the S_3 even row.
  CHECK(run("$E table sym --params 3 --even").code == 1);
  CHECK(run("$E table sym --params 4,5 --even").code == 0);
}
