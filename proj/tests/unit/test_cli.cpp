#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "framecover/io.hpp"

namespace fs = std::filesystem;
using framecover::io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

class Workdir {
 public:
  Workdir() : path_(fs::temp_directory_path() / ("framecover_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + FRAMECOVER_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json report(const std::string& args, const std::string& env = "") {
  const Run r = cli("--json " + args, env);
  json j = json::parse(r.out);
  CHECK(j["exit_code"] == r.code);
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("write, read back and verify") {
    const Workdir dir;
    CHECK(cli("gen-graph --graph kneser:5,2 --out " + dir / "g.json").code == 0);
    CHECK(cli("search exact-bc --graph " + dir / "g.json" + " --out " + dir / "c.json").code == 0);
    CHECK(cli("verify cover --cover " + dir / "c.json").code == 0);
    CHECK(cli("verify cover --cover " + dir / "c.json" + " --d 2").code == 1);
    CHECK(cli("convert cover-to-code --cover " + dir / "c.json" + " --out " + dir / "code.txt").code == 0);
    CHECK(cli("verify sfpc --code " + dir / "code.txt" + " --r 2").code == 0);
    CHECK(cli("convert code-to-cover --code " + dir / "code.txt" + " --r 2 --out " + dir / "back.json").code == 0);
    CHECK(cli("verify cover --cover " + dir / "back.json").code == 0);
    CHECK(cli("convert cover-to-cff --cover " + dir / "c.json" + " --out " + dir / "f.txt").code == 0);
    CHECK(cli("verify cff --cff " + dir / "f.txt" + " --r 2 --w 2 --d 1").code == 0);

    const json v = report("verify sfpc --code " + dir / "code.txt" + " --r 2");
    CHECK(v["verdict"] == "pass");
    CHECK(v["inputs"].size() == 1);
  }

  TEST_CASE("verification failures exit with 1") {
    const Workdir dir;
    framecover::io::write_file(dir / "dup.txt", "3 2\n10\n01\n10\n");
    const json j = report("verify sfpc --code " + dir / "dup.txt" + " --r 1");
    CHECK(j["exit_code"] == 1);
    CHECK(j["verdict"] == "fail");
  }

  TEST_CASE("usage and parse errors exit with 2") {
    const Workdir dir;
    framecover::io::write_file(dir / "bad.txt", "2 2\n10\n1x\n");
    const json j = report("verify sfpc --code " + dir / "bad.txt" + " --r 1");
    CHECK(j["exit_code"] == 2);
    CHECK(j["error"]["kind"] == "parse");
    CHECK(j["error"]["line"] == 3);
    CHECK(j["error"]["column"] == 2);
    CHECK(cli("verify sfpc --code " + dir / "missing.txt" + " --r 1").code == 2);
    CHECK(cli("verify sfpc --r 1").code == 2);
    CHECK(cli("no-such-verb").code == 2);
    CHECK(cli("hadamard cover-k8d --order 6").code == 2);
    CHECK(cli("construct random --t 10 --r 2 --p 1.5").code == 2);
  }

  TEST_CASE("budgets exit with 3 and can be raised") {
    const json j = report("search exact-bc --graph kneser:7,3");
    CHECK(j["exit_code"] == 3);
    CHECK(j["verdict"] == "budget");
    CHECK(cli("--budget 80 search exact-bc --graph kneser:7,3").code == 0);
    CHECK(cli("search exact-bc --graph kneser:7,3", "FRAMECOVER_BUDGET=edges=80").code == 0);
    CHECK(cli("--budget nonsense search exact-bc --graph kneser:5,2").code == 2);
  }

  TEST_CASE("bounds and reproducible constructions") {
    const json b = report("bound sfpc --t 10 --r 2");
    CHECK(b["results"]["value"].get<double>() == doctest::Approx(35.3126).epsilon(1e-5));
    CHECK(b["results"]["floor"] == 35);
    const json r1 = report("construct random --t 10 --r 2 --seed 7 --trials 10");
    const json r2 = report("construct random --t 10 --r 2 --seed 7 --trials 10");
    CHECK(r1["exit_code"] == 0);
    CHECK(r1["rng"]["seed"] == 7);
    CHECK(r1["results"] == r2["results"]);
  }

  TEST_CASE("quick demo") {
    const Run r = cli("demo --quick");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
