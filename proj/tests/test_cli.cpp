#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixture_paths.hpp"

namespace {

struct RunResult {
  int status;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(NSALG_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string fx(const std::string& name) { return fixtures_dir() + "/" + name; }

}  // namespace

TEST_CASE("check prints the axiom profile") {
  auto r = run("check " + fx("la8.cay"));
  CHECK(r.status == 0);
  CHECK(r.output.find("left_invertive=true") != std::string::npos);
  CHECK(r.output.find("associative=false") != std::string::npos);
  CHECK(r.output.find("medial=true") != std::string::npos);
}

TEST_CASE("check on a group fixture") {
  auto r = run("check " + fx("z4.cay"));
  CHECK(r.status == 0);
  CHECK(r.output.find("is_group=true") != std::string::npos);
  CHECK(r.output.find("two_sided_identity=0") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("soft " + fx("ex_2_1_1.soft") + " --check bogus --quantifier all").status == 2);
}

TEST_CASE("missing file is a usage error") {
  CHECK(run("check does-not-exist.cay").status == 2);
}

TEST_CASE("soft verdicts drive the exit code") {
  CHECK(run("soft " + fx("ex_2_1_13.soft") + " --check lagrange --quantifier all").status == 0);
  CHECK(run("soft " + fx("ex_2_1_14.soft") + " --check lagrange --quantifier all").status == 1);
  CHECK(run("soft " + fx("ex_2_1_14.soft") + " --check lagrange --quantifier any").status == 0);
  CHECK(run("soft " + fx("ex_2_1_18.soft") + " --check lagrange --quantifier none").status == 0);
  auto r = run("soft " + fx("ex_2_1_8.soft") + " --check pseudo --quantifier all");
  CHECK(r.status == 1);
  CHECK(r.output.find("witness a1") != std::string::npos);
}

TEST_CASE("op writes a soft set that reparses") {
  auto tmp = std::filesystem::temp_directory_path() / "nsalg_union.soft";
  auto r = run("op --kind eunion " + fx("ex_2_1_5_F.soft") + " " + fx("ex_2_1_5_K.soft") +
               " --out " + tmp.string());
  CHECK(r.status == 0);
  std::ifstream in(tmp);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("param a2: 0 I 1") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("neutrosophify adjoin") {
  auto tmp = std::filesystem::temp_directory_path() / "nsalg_adj.cay";
  auto r = run("neutrosophify " + fx("la4.cay") + " --mode adjoin --out " + tmp.string());
  CHECK(r.status == 0);
  auto chk = run("check " + tmp.string());
  CHECK(chk.status == 0);
  CHECK(chk.output.find("order=8") != std::string::npos);
  CHECK(chk.output.find("left_invertive=true") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("enumerate prints canonical subloops") {
  auto r = run("enumerate " + fx("l5_3.cay") + " --kind subloop --max 2");
  CHECK(r.status == 0);
  CHECK(r.output == "e\ne 1\ne 2\ne 3\ne 4\ne 5\n");
}

TEST_CASE("NSALG_SEED reaches the suite report") {
  auto r = run("paper-suite --fixtures " + fixtures_dir() + " --filter ex-2.1.1 --seed 7");
  CHECK(r.status == 0);
  CHECK(r.output.find("seed 7") != std::string::npos);
}

TEST_CASE("search finds the additive counterexample deterministically") {
  auto first = run("search --claim extended-union-of-soft-groups --max-n 16 --fixtures " +
                   fixtures_dir());
  CHECK(first.status == 0);
  CHECK(first.output.find("witness") != std::string::npos);
  auto second = run("search --claim extended-union-of-soft-groups --max-n 16 --fixtures " +
                    fixtures_dir());
  CHECK(first.output == second.output);

  auto none = run("search --claim extended-union-of-soft-ideals --max-n 16 --fixtures " +
                  fixtures_dir());
  CHECK(none.status == 1);
  CHECK(none.output.find("no witness") != std::string::npos);
}
