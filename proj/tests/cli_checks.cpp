// Black-box checks of the CLI binary: exit codes, output framing, config
// files. argv[1] is the binary path.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void check(bool ok, const std::string& name) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_checks <binary>\n";
    return 1;
  }
  const std::string cli = argv[1];

  const RunResult ok = run(cli + " phase-dist --kind add --count 1 --n 1 --alpha 1.0");
  check(ok.exit_code == 0, "valid invocation exits 0");
  check(ok.output.rfind("# {", 0) == 0, "CSV starts with a hash-prefixed JSON header");
  check(ok.output.find("param,theta,density") != std::string::npos,
        "CSV carries the column row");
  check(ok.output.find('\r') == std::string::npos, "output uses LF endings only");

  const RunResult json =
      run(cli + " phase-dist --kind add --count 1 --n 1 --alpha 1.0 --format json");
  check(json.exit_code == 0 && json.output.rfind("{", 0) == 0,
        "JSON format emits a JSON document");

  check(run(cli + " phase-dist --kind bogus --count 1 --alpha 1.0").exit_code == 2,
        "unknown kind exits 2");
  check(run(cli + " phase-dist --kind add --count 99 --alpha 1.0").exit_code == 2,
        "out-of-range count exits 2");
  check(run(cli + " fluctuation --kind add --alpha-scan 2:1:0.5").exit_code == 2,
        "malformed scan exits 2");
  check(run(cli + " dispersion --kind subtract --count 2 --n 1 --alpha 0.0").exit_code == 4,
        "subtracting below the vacuum exits 4");
  check(run(cli).exit_code == 2, "missing subcommand exits 2");

  // Config file path: same dataset as the equivalent flag invocation.
  const std::string config_path = "cli_checks_config.tmp";
  {
    std::ofstream cfg(config_path);
    cfg << "command = dispersion\n"
        << "kind = add\n"
        << "count = 1\n"
        << "n = 1\n"
        << "alpha-scan = 0.5:1.5:0.5\n";
  }
  const RunResult from_config = run(cli + " --config " + config_path);
  const RunResult from_flags =
      run(cli + " dispersion --kind add --count 1 --n 1 --alpha-scan 0.5:1.5:0.5");
  check(from_config.exit_code == 0 && from_config.output == from_flags.output,
        "config file reproduces the flag invocation");
  std::remove(config_path.c_str());

  const RunResult quick = run(cli + " verify --suite quick");
  check(quick.exit_code == 0, "quick verify suite exits 0");
  check(quick.output.find("category,checks,failures") != std::string::npos,
        "verify emits the category table");

  std::cout << (g_failures == 0 ? "ALL CLI CHECKS PASSED\n"
                                : std::to_string(g_failures) + " CLI CHECKS FAILED\n");
  return g_failures;
}
