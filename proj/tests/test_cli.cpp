#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string bin() {
  const char* p = std::getenv("SIGNEDFLOW_BIN");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("signedflow-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream f(path / name);
    f << content;
    return (path / name).string();
  }
  std::string name(const std::string& n) const { return (path / n).string(); }
};

const char* kBarbell = "v 2\ne 0 1 +\ne 0 0 -\ne 1 1 -\n";
const char* kTriangle = "v 3\ne 0 1 +\ne 1 2 +\ne 2 0 +\n";
const char* kNegLoop = "v 1\ne 0 0 -\n";

}  // namespace

TEST_CASE("check reports structure and admissibility") {
  TempDir dir;
  RunResult r = run("check " + dir.file("b.sg", kBarbell));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("admissible: yes") != std::string::npos);
  CHECK(r.out.find("negativeness: 2") != std::string::npos);
  CHECK(r.out.find("bridges: 0") != std::string::npos);

  RunResult neg = run("check " + dir.file("l.sg", kNegLoop));
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("negativeness 1") != std::string::npos);

  // bridge joining two balanced triangles: the cut-edge clause
  RunResult cut = run("check " + dir.file("two.sg",
                                          "v 6\ne 0 1 +\ne 1 2 +\ne 2 0 +\n"
                                          "e 3 4 +\ne 4 5 +\ne 5 3 +\ne 0 3 +\n"));
  CHECK(cut.exit_code == 1);
  CHECK(cut.out.find("cut-edge") != std::string::npos);

  RunResult bad = run("check " + dir.file("bad.sg", "e 0 1 +\n"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("solve writes verifiable certificates") {
  TempDir dir;
  std::string tri = dir.file("t.sg", kTriangle);
  std::string cert = dir.name("t.cert");
  RunResult r = run("solve " + tri + " --group int:2 -o " + cert);
  CHECK(r.exit_code == 0);
  RunResult v = run("verify " + tri + " " + cert);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("ok") != std::string::npos);

  // exhaustively no 4-NZF on the one-internal-vertex family
  RunResult none = run("gen fig1 --internal 1 -o " + dir.name("f.sg"));
  REQUIRE(none.exit_code == 0);
  RunResult s4 = run("solve " + dir.name("f.sg") + " --group int:4");
  CHECK(s4.exit_code == 1);
  CHECK(s4.out.find("no flow") != std::string::npos);

  // balanced z2z3 on the barbell
  std::string bar = dir.file("b.sg", kBarbell);
  std::string bcert = dir.name("b.cert");
  RunResult bz = run("solve " + bar + " --group z2z3 --balanced -o " + bcert);
  CHECK(bz.exit_code == 0);
  RunResult bv = run("verify " + bar + " " + bcert);
  CHECK(bv.exit_code == 0);

  // budget exhaustion is its own exit code
  RunResult tiny = run("solve " + bar + " --group int:6 --max-nodes 1");
  CHECK(tiny.exit_code == 3);
}

TEST_CASE("build11 bundle round trips and tampering is caught") {
  TempDir dir;
  std::string bar = dir.file("b.sg", kBarbell);
  std::string prefix = dir.name("b");
  RunResult r = run("build11 " + bar + " -o " + prefix);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nowhere-zero: pass") != std::string::npos);
  CHECK(r.out.find("abs-ne-9: pass") != std::string::npos);
  CHECK(r.out.find("abs-10-on-shared-support-bridges: pass") != std::string::npos);

  for (const char* stage : {".z2z3.cert", ".f1.cert", ".f2.cert", ".f11.cert"}) {
    RunResult v = run("verify " + bar + " " + prefix + stage);
    CHECK(v.exit_code == 0);
  }

  // flip one value in the 11-flow certificate
  std::string tampered;
  {
    std::ifstream in(prefix + ".f11.cert");
    std::string line;
    bool done = false;
    while (std::getline(in, line)) {
      if (!done && line.rfind("f 0 ", 0) == 0) {
        line = "f 0 9";
        done = true;
      }
      tampered += line + "\n";
    }
  }
  std::string tam = dir.file("tampered.cert", tampered);
  RunResult tv = run("verify " + bar + " " + tam);
  CHECK(tv.exit_code == 1);

  // a certificate for a different graph: hash mismatch
  std::string tri = dir.file("t.sg", kTriangle);
  RunResult hm = run("verify " + tri + " " + prefix + ".f11.cert");
  CHECK(hm.exit_code == 2);

  // inadmissible input
  RunResult na = run("build11 " + dir.file("l.sg", kNegLoop));
  CHECK(na.exit_code == 1);

  // audit file exists and records passes
  std::ifstream audit(prefix + ".audit.txt");
  REQUIRE(audit.good());
  std::string content((std::istreambuf_iterator<char>(audit)),
                      std::istreambuf_iterator<char>());
  CHECK(content.find("result pass") != std::string::npos);
}

TEST_CASE("flownum") {
  TempDir dir;
  RunResult gen = run("gen petersen -o " + dir.name("p.sg"));
  REQUIRE(gen.exit_code == 0);
  RunResult r = run("flownum " + dir.name("p.sg") + " --max-k 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("5", 0) == 0);

  RunResult none = run("flownum " + dir.file("l.sg", kNegLoop) + " --max-k 11");
  CHECK(none.exit_code == 1);
}

TEST_CASE("shrubbery and nzw commands") {
  TempDir dir;
  std::string edge = dir.file("e.sg", "v 2\ne 0 1 +\n");
  CHECK(run("shrubbery " + edge).exit_code == 0);

  RunResult k4r = run("gen k4 -o " + dir.name("k4.sg"));
  REQUIRE(k4r.exit_code == 0);
  RunResult ks = run("shrubbery " + dir.name("k4.sg"));
  CHECK(ks.exit_code == 1);
  CHECK(ks.out.find("S3") != std::string::npos);

  std::string cert = dir.name("w.cert");
  RunResult w = run("nzw " + dir.file("b.sg", kBarbell) + " --sign - -o " + cert);
  CHECK(w.exit_code == 0);
  CHECK(run("verify " + dir.name("b.sg") + " " + cert).exit_code == 0);

  // the bare unbalanced theta cannot reach sigma = +1
  RunResult gt = run("gen theta -o " + dir.name("th.sg"));
  REQUIRE(gt.exit_code == 0);
  CHECK(run("nzw " + dir.name("th.sg") + " --sign +").exit_code == 1);
  CHECK(run("nzw " + dir.name("th.sg") + " --sign -").exit_code == 0);
}

TEST_CASE("gen families and the seed contract") {
  TempDir dir;
  RunResult nosee = run("gen random --n 4 --m 5");
  CHECK(nosee.exit_code == 2);

  RunResult a = run("gen random --n 4 --m 5 --pneg 0.5 --seed 7");
  RunResult b = run("gen random --n 4 --m 5 --pneg 0.5 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult f = run("gen fig1 --internal 2");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("v 6") != std::string::npos);

  CHECK(run("gen nosuch").exit_code == 2);
}

TEST_CASE("batch corpus audit stays clean") {
  RunResult r = run("build11 --corpus 3,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 audit failures") != std::string::npos);
}
