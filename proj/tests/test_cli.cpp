// End-to-end tests against the built CLI binary (path injected by CMake).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(M0N_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("strata json payload") {
  RunResult r = run_cli("strata --n 5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"counts_by_codim\":[1,10,15]") != std::string::npos);
  CHECK(r.out.find("\"betti\":[1,5,1]") != std::string::npos);
  CHECK(r.out.find("\"schema\":1") != std::string::npos);
}

TEST_CASE("keel single degree prints the dimension") {
  RunResult r = run_cli("keel --n 5 --degree 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("strata --n 2").exit_code == 2);
  CHECK(run_cli("nonsense --n 5").exit_code == 2);
  CHECK(run_cli("strata").exit_code == 2);
  CHECK(run_cli("keel --n 3").exit_code == 2);
  CHECK(run_cli("cross-check --n 9").exit_code == 2);
}

TEST_CASE("domain errors exit with 1") {
  // epsilon stratification of a collision-free configuration
  CHECK(run_cli("classify --values 1/7,1/11 --epsilon 1/10").exit_code == 1);
}

TEST_CASE("cross-check agreement") {
  for (int n = 4; n <= 6; ++n) {
    RunResult r = run_cli("cross-check --n " + std::to_string(n) + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"agree\":true") != std::string::npos);
  }
}

TEST_CASE("byte-identical output across runs") {
  const std::vector<std::string> cmds = {
      "strata --n 6 --format json",
      "maxdeg --n 5 --format json",
      "keel --n 5 --format json",
      "arrangement --builder ny --param 2 --format json",
      "grav --n 5 --ny --format json",
      "involution --orbits --pairs 1 --grade 1 --format json",
      "compose --a 1 --b 2 --format json",
      "classify --values 1/2,1/3 --format json",
      "cross-check --n 5 --format json",
  };
  for (const auto& cmd : cmds) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("every subcommand is reachable") {
  const std::vector<std::string> cmds = {
      "strata --n 4",
      "maxdeg --n 4",
      "keel --n 4",
      "arrangement --builder braid --param 3",
      "grav --n 4",
      "involution --orbits --pairs 1 --grade 0",
      "compose --a 1 --b 1",
      "classify --values 1/4",
      "cross-check --n 4",
  };
  for (const auto& cmd : cmds) {
    INFO(cmd);
    CHECK(run_cli(cmd).exit_code == 0);
  }
}

TEST_CASE("dot output") {
  RunResult hasse = run_cli("strata --n 4 --dot");
  CHECK(hasse.exit_code == 0);
  CHECK(hasse.out.find("digraph strata") != std::string::npos);
  RunResult trees = run_cli("maxdeg --n 4 --dot");
  CHECK(trees.exit_code == 0);
  CHECK(trees.out.find("shape=box") != std::string::npos);
}

TEST_CASE("size guards and --force") {
  CHECK(run_cli("involution --orbits --pairs 5 --grade 0").exit_code == 2);
  CHECK(run_cli("involution --orbits --pairs 5 --grade 0 --force").exit_code == 0);
}

TEST_CASE("self-check flags") {
  RunResult strata = run_cli("strata --n 5 --check");
  CHECK(strata.exit_code == 0);
  CHECK(strata.out.find("check: ok") != std::string::npos);

  RunResult keel = run_cli("keel --n 5 --check --format json");
  CHECK(keel.exit_code == 0);
  CHECK(keel.out.find("\"relations_vanish\":true") != std::string::npos);

  RunResult arr = run_cli("arrangement --builder ny --param 2 --check-dr --fixed-flats --format json");
  CHECK(arr.exit_code == 0);
  CHECK(arr.out.find("\"deletion_restriction\":true") != std::string::npos);
  CHECK(arr.out.find("\"fixed_locus_flats_by_codim\":[1,4,1]") != std::string::npos);

  RunResult residue = run_cli("grav --n 5 --residue --format json");
  CHECK(residue.exit_code == 0);
  CHECK(residue.out.find("\"all_ok\":true") != std::string::npos);

  RunResult monad = run_cli("involution --check-monad");
  CHECK(monad.exit_code == 0);
  CHECK(monad.out.find("monad_law: true") != std::string::npos);
}

TEST_CASE("doubling and composition trees") {
  RunResult d = run_cli("involution --double 1/2 --format json");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("\"meets_fix_locus\":true") != std::string::npos);

  RunResult t = run_cli("compose --a 1 --b 2 --trees --format json");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("\"result_pairs\":4") != std::string::npos);
  CHECK(t.out.find("\"b:z1\"") != std::string::npos);
  CHECK(t.out.find("\"b':z1\"") != std::string::npos);
}

TEST_CASE("json reports carry provenance") {
  RunResult r = run_cli("grav --n 4 --ny --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"module\":\"grav\"") != std::string::npos);
  CHECK(r.out.find("\"version\":") != std::string::npos);
  CHECK(r.out.find("\"dims\":[1,6,9]") != std::string::npos);
}
