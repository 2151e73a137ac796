// Command-line front end: runs verification suites and exposes the volume,
// curvature, net, and file-checking utilities individually.
//
// Exit codes: 0 success, 1 failed check or computation error, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "widthkit/bundled_rings.hpp"
#include "widthkit/charclass.hpp"
#include "widthkit/cubical.hpp"
#include "widthkit/homology.hpp"
#include "widthkit/nets.hpp"
#include "widthkit/report.hpp"
#include "widthkit/spaceform.hpp"

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Flat key=value config file: blank lines and #-comments allowed, one
// key=value pair per line, keys from the run flag set.
std::map<std::string, std::string> read_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  const auto trim = [](std::string s) {
    const auto from = s.find_first_not_of(" \t\r");
    const auto to = s.find_last_not_of(" \t\r");
    return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
  };
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(text.substr(0, eq));
    if (!kv.emplace(key, trim(text.substr(eq + 1))).second) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) + ": duplicate key " + key);
    }
  }
  return kv;
}

// Relative output paths land in $WIDTHKIT_OUT_DIR when it is set.
std::string resolve_out(const std::string& out) {
  if (out.empty()) return out;
  std::filesystem::path p(out);
  if (p.is_absolute()) return out;
  const char* dir = std::getenv("WIDTHKIT_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return out;
  return (std::filesystem::path(dir) / p).string();
}

int write_text(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  const std::string path = resolve_out(out);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  f << text;
  return f.good() ? 0 : 1;
}

int cmd_run(const widthkit::report::SuiteConfig& cfg, const std::string& out,
            const std::string& format, bool omit_runtime) {
  const auto report = widthkit::report::run_suite(cfg);
  const std::string text = (format == "tsv")
                               ? widthkit::report::to_tsv(report, !omit_runtime)
                               : widthkit::report::to_json(report, !omit_runtime);
  const int werr = write_text(out, text);
  if (werr != 0) return werr;
  if (!out.empty()) {
    std::cerr << (report.overall_pass ? "PASS" : "FAIL") << " suite=" << cfg.suite
              << " checks=" << report.checks.size() << "\n";
  }
  return report.overall_pass ? 0 : 1;
}

int cmd_check_ring(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open ring file: " << file << "\n";
    return 1;
  }
  const auto ring = widthkit::charclass::CohomRing::parse(in);
  std::cout << "ok d=" << ring.dimension();
  std::cout << " dims=";
  for (int p = 0; p <= ring.dimension(); ++p) {
    if (p > 0) std::cout << ",";
    std::cout << ring.dim(p);
  }
  std::cout << " pin_minus=" << (widthkit::charclass::is_pin_minus(ring) ? 1 : 0) << "\n";
  return 0;
}

int cmd_check_complex(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open complex file: " << file << "\n";
    return 1;
  }
  const auto cx = widthkit::cubical::parse_complex(in);
  // Construction validates that consecutive mod-2 boundaries compose to zero.
  const auto cc = widthkit::homology::ChainComplexGF2::from_complex(cx);
  std::cout << "ok n=" << cx.n() << " k=" << cx.k() << " cells=";
  for (int d = 0; d <= cx.k(); ++d) {
    if (d > 0) std::cout << ",";
    std::cout << cx.cell_count(d);
  }
  std::cout << " betti=";
  for (int d = 0; d <= cc.top_degree(); ++d) {
    if (d > 0) std::cout << ",";
    std::cout << widthkit::homology::betti(cc, d);
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width verification toolkit"};
  app.require_subcommand(1);

  // --- run ------------------------------------------------------------------
  widthkit::report::SuiteConfig cfg;
  std::string out, format = "json";
  bool omit_runtime = false;
  std::vector<std::string> suite_choices = widthkit::report::suite_names();
  suite_choices.push_back("all");

  std::string config_file;
  auto* run = app.add_subcommand("run", "run a verification suite and write its report");
  run->add_option("--config", config_file, "key=value file filling in flags left unset");
  auto* opt_suite = run->add_option("--suite", cfg.suite, "suite name or 'all'")
                        ->default_val("all")
                        ->check(CLI::IsMember(suite_choices));
  auto* opt_n =
      run->add_option("--n", cfg.n, "lattice scale parameter")->default_val(1)->check(CLI::PositiveNumber);
  auto* opt_seed = run->add_option("--seed", cfg.seed, "base seed for randomized checks")
                       ->default_val(20240817);
  auto* opt_tol = run->add_option("--tol", cfg.tol, "tolerance for floating-point zero tests")
                      ->default_val(1e-9)
                      ->check(CLI::PositiveNumber);
  auto* opt_out = run->add_option(
      "--out", out, "report file (stdout when omitted; relative paths land in $WIDTHKIT_OUT_DIR)");
  auto* opt_format = run->add_option("--format", format, "report format")
                         ->default_val("json")
                         ->check(CLI::IsMember({"json", "tsv"}));
  auto* opt_omit =
      run->add_flag("--omit-runtime", omit_runtime, "drop the runtime field for byte-stable output");

  // --- volume ---------------------------------------------------------------
  int vd = 3;
  double vsigma = 0.0, vr = 1.0;
  auto* volume = app.add_subcommand("volume", "ball volume in the constant-curvature model");
  volume->add_option("--d", vd, "dimension")->required()->check(CLI::PositiveNumber);
  volume->add_option("--sigma", vsigma, "scalar curvature of the model")->required();
  volume->add_option("--r", vr, "radius")->required();

  // --- mscal ----------------------------------------------------------------
  int md = 3;
  double mvol = 1.0, mr = 1.0, mtol = 1e-8;
  auto* mscal = app.add_subcommand("mscal", "model curvature whose ball of radius r has the given volume");
  mscal->add_option("--d", md, "dimension")->required()->check(CLI::PositiveNumber);
  mscal->add_option("--vol", mvol, "target ball volume")->required();
  mscal->add_option("--r", mr, "radius")->required();
  mscal->add_option("--tol", mtol, "bisection tolerance")->default_val(1e-8);

  // --- fiber-radius -----------------------------------------------------------
  int fd = 3;
  double fsigma = 2.0, fkappa = 1.0;
  auto* fiber = app.add_subcommand("fiber-radius",
                                   "certified fiber radius for the curvature comparison");
  fiber->add_option("--d", fd, "base dimension")->required()->check(CLI::PositiveNumber);
  fiber->add_option("--sigma", fsigma, "target scalar curvature (positive)")->required();
  fiber->add_option("--kappa", fkappa, "base sectional curvature bound (nonnegative)")->required();

  // --- net ------------------------------------------------------------------
  int nk = 2;
  double ndelta = 0.25, nside = 1.0;
  std::uint64_t nseed = 20240817;
  std::string nout;
  auto* net = app.add_subcommand("net", "greedy separated net on a flat torus");
  net->add_option("--k", nk, "torus dimension")->default_val(2)->check(CLI::PositiveNumber);
  net->add_option("--delta", ndelta, "separation distance")->required();
  net->add_option("--side", nside, "side length of every factor circle")->default_val(1.0);
  net->add_option("--seed", nseed, "seed for the candidate stream")->default_val(20240817);
  net->add_option("--out", nout,
                  "write net points as TSV (relative paths land in $WIDTHKIT_OUT_DIR)");

  // --- file checks -------------------------------------------------------------
  std::string ring_file;
  auto* check_ring = app.add_subcommand("check-ring", "parse and validate a ring file");
  check_ring->add_option("file", ring_file, "ring file path")->required();

  std::string complex_file;
  auto* check_complex = app.add_subcommand("check-complex", "parse and validate a complex file");
  check_complex->add_option("file", complex_file, "complex file path")->required();

  auto* list_rings = app.add_subcommand("list-rings", "names of the stock rings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed() && !config_file.empty()) {
    // Command-line flags win; the config file fills in the rest.
    try {
      const auto kv = read_flat_config(config_file);
      for (const auto& [key, value] : kv) {
        if (key == "suite") {
          if (opt_suite->count() == 0) cfg.suite = value;
        } else if (key == "n") {
          if (opt_n->count() == 0) cfg.n = std::stoi(value);
        } else if (key == "seed") {
          if (opt_seed->count() == 0) cfg.seed = std::stoull(value);
        } else if (key == "tol") {
          if (opt_tol->count() == 0) cfg.tol = std::stod(value);
        } else if (key == "out") {
          if (opt_out->count() == 0) out = value;
        } else if (key == "format") {
          if (opt_format->count() == 0) format = value;
        } else if (key == "omit-runtime") {
          if (opt_omit->count() == 0) omit_runtime = value == "1" || value == "true";
        } else {
          throw std::runtime_error(config_file + ": unknown config key " + key);
        }
      }
      if (std::find(suite_choices.begin(), suite_choices.end(), cfg.suite) ==
          suite_choices.end()) {
        throw std::runtime_error(config_file + ": unknown suite " + cfg.suite);
      }
      if (cfg.n < 1) throw std::runtime_error(config_file + ": n must be positive");
      if (!(cfg.tol > 0)) throw std::runtime_error(config_file + ": tol must be positive");
      if (format != "json" && format != "tsv") {
        throw std::runtime_error(config_file + ": format must be json or tsv");
      }
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (run->parsed()) return cmd_run(cfg, out, format, omit_runtime);
    if (volume->parsed()) {
      std::cout << num(widthkit::spaceform::ball_volume(vd, vsigma, vr)) << "\n";
      return 0;
    }
    if (mscal->parsed()) {
      std::cout << num(widthkit::spaceform::mscal_from_volume(md, mvol, mr, mtol)) << "\n";
      return 0;
    }
    if (fiber->parsed()) {
      const double rho = widthkit::spaceform::fiber_radius_bound(fd, fsigma, fkappa);
      if (!widthkit::spaceform::mscal_certificate(fd, fsigma, fkappa, rho)) {
        std::cerr << "bound failed its own certificate\n";
        return 1;
      }
      std::cout << num(rho) << "\n";
      return 0;
    }
    if (net->parsed()) {
      const widthkit::nets::FlatTorus torus{
          std::vector<double>(static_cast<std::size_t>(nk), nside)};
      const auto result = widthkit::nets::greedy_net(torus, ndelta, nseed);
      const auto check = widthkit::nets::verify_net(torus, result, nseed + 1);
      std::cout << "points=" << result.points.size() << " separated=" << check.separated
                << " dense=" << check.dense << " min_pairwise=" << num(check.min_pairwise)
                << "\n";
      if (!nout.empty()) {
        std::string text;
        for (const auto& p : result.points) {
          for (std::size_t t = 0; t < p.size(); ++t) {
            if (t > 0) text += "\t";
            text += num(p[t]);
          }
          text += "\n";
        }
        if (write_text(nout, text) != 0) return 1;
      }
      return check.separated && check.dense ? 0 : 1;
    }
    if (check_ring->parsed()) return cmd_check_ring(ring_file);
    if (check_complex->parsed()) return cmd_check_complex(complex_file);
    if (list_rings->parsed()) {
      for (const auto& [name, text] : widthkit::charclass::bundled_ring_texts()) {
        std::cout << name << "\n";
      }
      return 0;
    }
  } catch (const widthkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
