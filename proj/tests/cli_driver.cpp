#include "hurwicz/io.hpp"
#include "hurwicz/reference_case.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

using namespace hurwicz;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hurwicz_cli_driver";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const fs::path err_path = work_dir() / "stderr.txt";
  const std::string command = std::string("\"") + HURWICZ_CLI_PATH + "\" " + args + " > \"" +
                              out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_text_file(out_path.string());
  result.err = read_text_file(err_path.string());
  return result;
}

std::string fixture_tree() {
  const fs::path path = work_dir() / "tree.json";
  write_text_file(path.string(), serialize_tree(reference_tree()));
  return path.string();
}

std::string path_in_work_dir(const std::string& name) {
  return (work_dir() / name).string();
}

}  // namespace

TEST_CASE("repro-paper reproduces the bundled case and exits 0") {
  const RunResult r = run_cli("repro-paper");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("reference reproduction (step 1/10)") == 0);
  CHECK(r.out.find("[ok]   exact risk estimate") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.err.empty());

  CHECK(run_cli("repro-paper --step 1/5").exit_code == 0);
  CHECK(run_cli("repro-paper --step 0").exit_code == 1);
}

TEST_CASE("normalize prints the matrix and writes CSV on request") {
  const std::string tree = fixture_tree();
  const std::string csv = path_in_work_dir("matrix.csv");
  const RunResult r = run_cli("normalize --tree " + tree + " --out " + csv);
  CHECK(r.exit_code == 0);
  CHECK(r.out == render_matrix(normalize(reference_tree())));
  CHECK(read_text_file(csv) == serialize_matrix_csv(normalize(reference_tree())));
}

TEST_CASE("sweep and regions run from either input form") {
  const std::string tree = fixture_tree();
  const std::string csv = path_in_work_dir("matrix.csv");
  REQUIRE(run_cli("normalize --tree " + tree + " --out " + csv).exit_code == 0);

  const RunResult from_tree = run_cli("sweep --tree " + tree);
  const RunResult from_matrix = run_cli("sweep --matrix " + csv);
  CHECK(from_tree.exit_code == 0);
  CHECK(from_matrix.exit_code == 0);
  CHECK(from_tree.out == from_matrix.out);
  CHECK(from_tree.out.find("f*") != std::string::npos);

  const RunResult coarse = run_cli("sweep --matrix " + csv + " --step 1/5");
  CHECK(coarse.exit_code == 0);
  CHECK(coarse.out.find("0.2") != std::string::npos);

  const RunResult regions = run_cli("regions --tree " + tree);
  CHECK(regions.exit_code == 0);
  CHECK(regions.out ==
        "f2: λ ∈ [0, 2/5]\n"
        "f3: λ ∈ [2/5, 4/5]\n"
        "f1: λ ∈ [4/5, 1]\n");
  CHECK(run_cli("regions --matrix " + csv).out == regions.out);
  CHECK(run_cli("regions").exit_code == 1);
  CHECK(run_cli("regions --tree " + tree + " --matrix " + csv).exit_code == 1);
}

TEST_CASE("simulate and estimate close the loop") {
  const std::string tree = fixture_tree();
  const std::string log = path_in_work_dir("log.csv");

  const RunResult sim =
      run_cli("simulate --tree " + tree + " --lambda 7/10 --n 200 --seed 42 --out " + log);
  CHECK(sim.exit_code == 0);
  CHECK(sim.out.empty());
  CHECK(read_text_file(log).find("index,step1,decision,step3,payment") == 0);

  const RunResult est = run_cli("estimate --tree " + tree + " --log " + log);
  CHECK(est.exit_code == 0);
  CHECK(est.out.find("strategy: f3 (010)") != std::string::npos);
  CHECK(est.out.find("λ ∈ (2/5, 4/5)") != std::string::npos);

  const RunResult grid = run_cli("estimate --tree " + tree + " --log " + log + " --step 1/10");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.find("λ ∈ {0.5, 0.6, 0.7}") != std::string::npos);

  // The same invocation without --out streams the log to stdout.
  const RunResult streamed =
      run_cli("simulate --tree " + tree + " --lambda 7/10 --n 200 --seed 42");
  CHECK(streamed.exit_code == 0);
  CHECK(streamed.out == read_text_file(log));

  CHECK(run_cli("simulate --tree " + tree + " --n 5 --seed 1").exit_code == 1);
  CHECK(run_cli("simulate --tree " + tree + " --lambda 1/2 --strategy 010 --n 5 --seed 1")
            .exit_code == 1);
}

TEST_CASE("strict estimation marks non-rationalizable logs with exit 2") {
  const std::string tree = fixture_tree();
  const std::string log = path_in_work_dir("f5.csv");
  REQUIRE(run_cli("simulate --tree " + tree + " --strategy 100 --n 30 --seed 3 --out " + log)
              .exit_code == 0);

  const RunResult lax = run_cli("estimate --tree " + tree + " --log " + log);
  CHECK(lax.exit_code == 0);
  CHECK(lax.out.find("status: non-rationalizable") != std::string::npos);
  CHECK(lax.out.find("fallback: f5 (100), λ̂ = 4/5, regret = 12/5") != std::string::npos);

  const RunResult strict = run_cli("estimate --tree " + tree + " --log " + log + " --strict");
  CHECK(strict.exit_code == 2);
  CHECK(strict.out.find("status: non-rationalizable") != std::string::npos);

  CHECK(run_cli("estimate --tree " + tree + " --log " + log + " --exact --step 1/10").exit_code ==
        1);
}

TEST_CASE("parse and validation failures exit 1") {
  const std::string tree = fixture_tree();

  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("bogus").exit_code == 1);
  CHECK(run_cli("normalize").exit_code == 1);
  CHECK(run_cli("normalize --tree " + path_in_work_dir("missing.json")).exit_code == 1);

  const std::string corrupt = path_in_work_dir("corrupt.json");
  write_text_file(corrupt, "{\"name\": \"x\"");
  const RunResult r = run_cli("normalize --tree " + corrupt);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") == 0);

  const std::string invalid = path_in_work_dir("invalid.json");
  std::string text = serialize_tree(reference_tree());
  const auto pos = text.find("\"a\": \"3/10\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\"a\": \"4/10\"");
  write_text_file(invalid, text);
  const RunResult v = run_cli("regions --tree " + invalid);
  CHECK(v.exit_code == 1);
  CHECK(v.err.find("probabilities do not sum to 1") != std::string::npos);

  const std::string badlog = path_in_work_dir("bad.csv");
  write_text_file(badlog, "index,step1,decision,step3,payment\n1,c,1,d,9\n");
  const RunResult b = run_cli("estimate --tree " + tree + " --log " + badlog);
  CHECK(b.exit_code == 1);
  CHECK(b.err.find("payment mismatch") != std::string::npos);

  CHECK(run_cli("sweep --tree " + tree + " --step 0").exit_code == 1);
  CHECK(run_cli("sweep --tree " + tree + " --step x").exit_code == 1);
}
