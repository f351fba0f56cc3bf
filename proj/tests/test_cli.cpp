#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "fundom/verify.hpp"

using namespace fundom;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

const std::string fx = std::string(FIXTURES_DIR) + "/";

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info and algebra verbs") {
  auto r = run("info " + fx + "a2.quiver");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "type: A2"));
  CHECK(contains(r.out, "indecomposables: 3"));

  auto g = run("gamma " + fx + "a2.quiver");
  CHECK(g.code == 0);
  CHECK(contains(g.out, "vertices: 3"));
  CHECK(contains(g.out, "arrow 2' -> 1"));
  CHECK(contains(g.out, "arrow 1 -> 2"));
  CHECK(contains(g.out, "relations: 0"));

  auto j = run("info " + fx + "a2.quiver --json");
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"type\": \"A2\""));
}

TEST_CASE("fd, tilting and cluster-tilting listings") {
  auto r = run("fd " + fx + "a2.quiver");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "objects: 5"));
  CHECK(contains(r.out, "2' shift"));

  auto t = run("tilting " + fx + "y3.quiver");
  CHECK(t.code == 0);
  CHECK(contains(t.out, "count: 14"));

  auto ct = run("cluster-tilting " + fx + "a2.quiver");
  CHECK(ct.code == 0);
  CHECK(contains(ct.out, "count: 5"));
  CHECK(contains(ct.out, "2,2'"));
}

TEST_CASE("ct-quiver produces the expected 3-cycle") {
  auto r = run("ct-quiver " + fx + "y3.quiver --object \"2/3,2,3'/2\" --dot "
               "--verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"2/3\" -> \"3'/2\""));
  CHECK(contains(r.out, "\"2\" -> \"2/3\""));
  CHECK(contains(r.out, "\"3'/2\" -> \"2\""));
}

TEST_CASE("gldim trichotomy via the CLI") {
  CHECK(run("gldim " + fx + "a3linear.quiver").out == "3\n");
  CHECK(run("gldim " + fx + "a2.quiver").out == "2\n");
  // Gamma(A2) is the hereditary path algebra of linear A3
  CHECK(run("gldim " + fx + "a2.quiver --algebra Gamma").out == "1\n");
}

TEST_CASE("exit codes") {
  CHECK(run("verify " + fx + "a2.quiver").code == 0);
  CHECK(run("tilting " + fx + "kronecker.quiver").code == 1);  // refusal
  CHECK(run("info no_such_file.quiver").code == 2);
  CHECK(run("ct-quiver " + fx + "a2.quiver --object nonsense").code == 2);

  auto k = run("verify " + fx + "kronecker.quiver");
  CHECK(k.code == 0);
  CHECK(contains(k.out, "non-Dynkin: skipped"));
}

TEST_CASE("deterministic output") {
  for (const std::string& cmd :
       {"verify " + fx + "y3.quiver", "ar " + fx + "e2.quiver",
        "cluster-tilting " + fx + "a3linear.quiver"}) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify library reports every proposition label") {
  Quiver a2 = parse_quiver("vertices 2\narrow 1 2");
  VerifyReport rep = verify_all(a2);
  CHECK(rep.items.size() == 16);
  CHECK(rep.all_pass());
  for (const auto& i : rep.items) CHECK(i.status == "pass");
}
