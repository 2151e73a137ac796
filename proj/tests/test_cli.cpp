#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "widthkit/cubical.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("widthkit_cli_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the CLI with the given arguments (optionally under an environment
// prefix) and captures exit code, stdout, stderr.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path out = work_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = work_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env_prefix + " " + std::string(WIDTHKIT_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("suite reports in both formats") {
  const auto tsv = run_cli("run --suite volume --format tsv --omit-runtime");
  CHECK(tsv.exit_code == 0);
  CHECK(tsv.out.rfind("# suite\tvolume", 0) == 0);
  CHECK(tsv.out.find("volume.01-euclidean") != std::string::npos);
  CHECK(tsv.out.find("# overall_pass\t1") != std::string::npos);
  CHECK(tsv.out.find("runtime") == std::string::npos);

  const auto json = run_cli("run --suite volume");
  CHECK(json.exit_code == 0);
  CHECK(json.out.rfind("{", 0) == 0);
  CHECK(json.out.find("\"overall_pass\": true") != std::string::npos);
  CHECK(json.out.find("\"runtime_seconds\"") != std::string::npos);
}

TEST_CASE("deterministic output modulo the runtime field") {
  const auto a = run_cli("run --suite net --omit-runtime --seed 7");
  const auto b = run_cli("run --suite net --omit-runtime --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto c = run_cli("run --suite net --omit-runtime --seed 8");
  CHECK(c.exit_code == 0);  // different seed still passes, bytes may differ
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("run --suite bogus").exit_code == 2);
  CHECK(run_cli("run --no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);           // a subcommand is required
  CHECK(run_cli("volume --d 3").exit_code == 2);  // missing required options
}

TEST_CASE("numeric subcommands print scriptable values") {
  const auto vol = run_cli("volume --d 3 --sigma 0 --r 1");
  CHECK(vol.exit_code == 0);
  CHECK(std::stod(vol.out) == doctest::Approx(4.18879020478639).epsilon(1e-10));

  const auto ms = run_cli("mscal --d 3 --vol 4.18879020478639053 --r 1");
  CHECK(ms.exit_code == 0);
  CHECK(std::stod(ms.out) == doctest::Approx(0.0).epsilon(1e-6));

  const auto fr = run_cli("fiber-radius --d 3 --sigma 2 --kappa 1");
  CHECK(fr.exit_code == 0);
  CHECK(std::stod(fr.out) > 0.0);
  CHECK(std::stod(fr.out) < 0.5);

  // Out-of-domain arguments surface as computation errors, not crashes.
  CHECK(run_cli("volume --d 3 --sigma 6 --r 3.2").exit_code == 1);
}

TEST_CASE("net subcommand reports and writes points") {
  const fs::path pts = work_dir() / "net_points.tsv";
  const auto r = run_cli("net --k 1 --delta 0.25 --out " + pts.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("points=4") != std::string::npos);
  const std::string text = slurp(pts);
  int lines = 0;
  for (const char ch : text) lines += ch == '\n';
  CHECK(lines == 4);
}

TEST_CASE("ring and complex file checks") {
  const auto good = run_cli(std::string("check-ring ") + WIDTHKIT_DATA_DIR + "/rings/rp2.ring");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("ok d=2") != std::string::npos);
  CHECK(good.out.find("pin_minus=1") != std::string::npos);

  const fs::path bad = work_dir() / "bad.ring";
  std::ofstream(bad) << "RING d=2\nH 0 1 one\nH 1 1 a\nH 2 1 aa\nCUP 1.0 1.0 -> -\nW1 -\nW2 "
                        "-\nTOP 2.0\n";
  const auto rejected = run_cli("check-ring " + bad.string());
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.err.find("degenerate") != std::string::npos);

  const fs::path cx_file = work_dir() / "torus.cx";
  {
    const auto cx = widthkit::cubical::Complex::build_skeleton(
        2, 2, widthkit::cubical::cubic_lattice(2, 2), widthkit::cubical::Vec{0, 0});
    std::ofstream out(cx_file, std::ios::binary);
    widthkit::cubical::serialize(cx, out);
  }
  const auto cx_ok = run_cli("check-complex " + cx_file.string());
  CHECK(cx_ok.exit_code == 0);
  CHECK(cx_ok.out.find("betti=1,2,1") != std::string::npos);

  const fs::path bad_cx = work_dir() / "bad.cx";
  std::ofstream(bad_cx) << "COMPLEX n=2 k=2\nGARBAGE\n";
  CHECK(run_cli("check-complex " + bad_cx.string()).exit_code == 1);

  CHECK(run_cli("check-ring " + (work_dir() / "missing.ring").string()).exit_code == 1);
}

TEST_CASE("relative outputs land in the configured directory") {
  const fs::path dir = work_dir() / "outdir";
  fs::create_directories(dir);
  const auto r = run_cli("run --suite volume --out rel_report.json",
                         "env WIDTHKIT_OUT_DIR=" + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "rel_report.json"));
  CHECK(slurp(dir / "rel_report.json").rfind("{", 0) == 0);
  // The summary line lands on stderr so the report file stays pure.
  CHECK(r.err.find("PASS suite=volume") != std::string::npos);

  // Absolute paths ignore the directory override.
  const fs::path abs = work_dir() / "abs_report.json";
  const auto r2 = run_cli("run --suite volume --out " + abs.string(),
                          "env WIDTHKIT_OUT_DIR=" + dir.string());
  CHECK(r2.exit_code == 0);
  CHECK(fs::exists(abs));
}

TEST_CASE("config files fill in unset flags only") {
  const fs::path cfg = work_dir() / "run.cfg";
  std::ofstream(cfg) << "suite=volume\nformat=tsv\nseed=123\n";
  const auto from_cfg = run_cli("run --config " + cfg.string() + " --omit-runtime");
  CHECK(from_cfg.exit_code == 0);
  CHECK(from_cfg.out.rfind("# suite\tvolume", 0) == 0);
  CHECK(from_cfg.out.find("seed=123") != std::string::npos);

  const auto overridden =
      run_cli("run --config " + cfg.string() + " --suite fiber-radius --omit-runtime");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.out.rfind("# suite\tfiber-radius", 0) == 0);
  CHECK(overridden.out.find("seed=123") != std::string::npos);  // config still fills the seed
}

TEST_CASE("list-rings names the stock rings") {
  const auto r = run_cli("list-rings");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cp2") != std::string::npos);
  CHECK(r.out.find("s2xs3") != std::string::npos);
}
