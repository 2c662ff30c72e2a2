#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Exercises the installed binary end to end: output formats, the exit-code
// contract, and report determinism.

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PSHKIT_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(PSH_DATA_DIR) + "/" + name; }

std::string strip_wall(std::string text) {
  // the wall time is the one nondeterministic field, on its own line
  auto pos = text.find("wall_seconds");
  if (pos != std::string::npos) {
    auto end = text.find('\n', pos);
    text.erase(pos, end == std::string::npos ? std::string::npos : end - pos + 1);
  }
  return text;
}

}  // namespace

TEST_CASE("compute subcommands") {
  auto lr = run("lr 3,2,1 2,1 2,1");
  CHECK(lr.code == 0);
  CHECK(lr.out == "2\n");

  auto hp = run("hopf-power 2 \"s[2]\"");
  CHECK(hp.code == 0);
  CHECK(hp.out == "3*s[2] + 1*s[1,1]\n");

  auto mu = run("mul \"s[2,1]\" \"s[1]\"");
  CHECK(mu.code == 0);
  CHECK(mu.out == "1*s[3,1] + 1*s[2,2] + 1*s[2,1,1]\n");

  auto cm = run("comul \"s[2]\"");
  CHECK(cm.code == 0);
  CHECK(cm.out == "1*s[](x)s[2] + 1*s[1](x)s[1] + 1*s[2](x)s[]\n");

  auto mhg = run("mhg --group Q8 --subgroup center");
  CHECK(mhg.code == 0);
  CHECK(mhg.out == "1 1 1 1 0\n0 0 0 0 2\n");

  auto ct = run("char-table --group S3");
  CHECK(ct.code == 0);
  CHECK(ct.out.find("class_size,1,3,2") == 0);

  auto pm = run("psi-matrix -M " + data("m_row11.txt") + " \"s[1](x)s[1]\"");
  CHECK(pm.code == 0);
  CHECK(pm.out == "1*s[2] + 1*s[1,1]\n");
}

TEST_CASE("group file ingestion through the CLI") {
  auto ct = run("char-table --group file:" + data("groups/v4.grp"));
  CHECK(ct.code == 0);
  CHECK(ct.out.find("class_size,1,1,1,1") == 0);
}

TEST_CASE("subgroup file through the CLI") {
  auto r = run("verify theorem21 --group D4 --subgroup file:" + data("groups/d4_rotations.sub"));
  CHECK(r.code == 0);
  auto refl = run("verify theorem28 --reflection 4 2 2");
  CHECK(refl.code == 0);
}

TEST_CASE("verify subcommand exit codes") {
  auto ok = run("verify theorem21 --group Q8 --subgroup center");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);

  auto bad = run("verify theorem21 --group NoSuchGroup --subgroup 1");
  CHECK(bad.code == 2);

  auto unknown = run("verify not-a-check --group Z2");
  CHECK(unknown.code == 2);
}

TEST_CASE("run-suite exit codes and determinism") {
  auto ok = run("run-suite " + data("mini.suite"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ok=yes") != std::string::npos);

  auto bad_group = run("run-suite " + data("bad_group.suite"));
  CHECK(bad_group.code == 2);

  auto corrupted = run("run-suite " + data("corrupted_matrix.suite"));
  CHECK(corrupted.code == 1);
  CHECK(corrupted.out.find("witness") != std::string::npos);

  auto missing = run("run-suite /nonexistent.suite");
  CHECK(missing.code == 2);

  // byte-identical reports modulo the wall-time field, including when the
  // jobs run concurrently
  auto a = run("run-suite " + data("mini.suite"));
  auto b = run("run-suite " + data("mini.suite") + " --jobs 4");
  CHECK(strip_wall(a.out) == strip_wall(b.out));

  auto csv = run("run-suite " + data("mini.suite") + " --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("job,status,expected,checked,ok") == 0);

  auto js = run("run-suite " + data("mini.suite") + " --format structured");
  CHECK(js.code == 0);
  CHECK(js.out.find("\"ok\": true") != std::string::npos);
}
