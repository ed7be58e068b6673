// Command-line front end: builds engineered states from flags or a flat
// key=value config file and emits figure-ready CSV/JSON datasets.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qphase/interferometry.hpp"
#include "qphase/io.hpp"
#include "qphase/phase.hpp"
#include "qphase/verification.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitInvalidSpec = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitZeroState = 4;

struct Options {
  std::string kind = "add";
  std::string count = "0";
  unsigned fock_n = 0;
  double alpha = 0.0;
  double theta2 = 0.0;
  std::string alpha_scan;
  std::size_t grid = qphase::kDefaultGrid;
  std::size_t phi_points = 256;
  std::string out = "-";
  std::string format = "csv";
  std::string suite = "full";
};

std::vector<unsigned> parse_count_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return {static_cast<unsigned>(std::stoul(text))};
  const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, pos)));
  const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(pos + 2)));
  if (hi < lo) throw qphase::InvalidSpecError("count range: hi < lo");
  std::vector<unsigned> counts;
  for (unsigned c = lo; c <= hi; ++c) counts.push_back(c);
  return counts;
}

// lo:hi:step, inclusive of hi up to half a step.
std::vector<double> parse_scan(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(std::stod(tok));
  if (parts.size() != 3 || parts[2] <= 0.0 || parts[1] < parts[0])
    throw qphase::InvalidSpecError("scan syntax is lo:hi:step with hi >= lo and step > 0");
  std::vector<double> values;
  for (double v = parts[0]; v <= parts[1] + 0.5 * parts[2]; v += parts[2])
    values.push_back(v);
  return values;
}

qphase::StateSpec make_spec(const Options& opt, unsigned count, double alpha) {
  qphase::StateSpec spec;
  spec.kind = qphase::io::kind_from_name(opt.kind);
  spec.count = count;
  spec.fock_n = opt.fock_n;
  spec.alpha_mag = alpha;
  spec.alpha_phase = opt.theta2;
  return spec;
}

nlohmann::json base_header(const std::string& command, const Options& opt) {
  return {{"tool", "qphase"},
          {"version", kVersion},
          {"command", command},
          {"tolerances", {{"truncation", qphase::kDefaultTruncationTol}}},
          {"grid", opt.grid}};
}

void emit(const qphase::io::Table& table, const Options& opt) {
  const std::string content =
      opt.format == "json" ? qphase::io::to_json(table) : qphase::io::to_csv(table);
  if (opt.out == "-")
    std::cout << content;
  else
    qphase::io::write_file(opt.out, content);
}

void check_density(const qphase::PhaseDistribution& dist, bool unit_integral) {
  for (double v : dist.density)
    if (v < -1e-12) throw std::runtime_error("negative density value");
  if (unit_integral && std::abs(qphase::trapezoid_integral(dist) - 1.0) > 1e-6)
    throw std::runtime_error("density failed the normalization spot-check");
}

void run_distribution_command(const std::string& command, const Options& opt) {
  qphase::io::Table table;
  table.header = base_header(command, opt);
  table.header["specs"] = nlohmann::json::array();
  const bool angular = command == "angular-q";
  table.columns = {"param", "theta", angular ? "radius" : "density"};
  for (unsigned c : parse_count_range(opt.count)) {
    const qphase::StateSpec spec = make_spec(opt, c, opt.alpha);
    table.header["specs"].push_back(qphase::io::spec_to_json(spec));
    const qphase::BuiltState built = qphase::build_state(spec);
    const qphase::PhaseDistribution dist =
        angular ? qphase::angular_q(built.state, opt.grid, spec)
                : qphase::phase_distribution(built.state, opt.grid, spec);
    check_density(dist, true);
    for (std::size_t i = 0; i < dist.theta.size(); ++i)
      table.rows.push_back({std::to_string(c),
                            qphase::io::format_double(dist.theta[i]),
                            qphase::io::format_double(dist.density[i])});
  }
  emit(table, opt);
}

std::vector<double> scan_alphas(const Options& opt) {
  if (!opt.alpha_scan.empty()) return parse_scan(opt.alpha_scan);
  return {opt.alpha};
}

void run_fluctuation(const Options& opt) {
  qphase::io::Table table;
  table.header = base_header("fluctuation", opt);
  table.header["spec"] = qphase::io::spec_to_json(make_spec(
      opt, parse_count_range(opt.count).front(), opt.alpha));
  table.columns = {"alpha",   "mean_n",  "var_n", "sin_mean", "cos_mean",
                   "sin_var", "cos_var", "U",     "S",        "Q"};
  const unsigned count = parse_count_range(opt.count).front();
  for (double a : scan_alphas(opt)) {
    const qphase::StateSpec spec = make_spec(opt, count, a);
    const qphase::BuiltState built = qphase::build_state(spec);
    const qphase::FluctuationReport rep = qphase::fluctuation_report(built.state);
    table.rows.push_back(
        {qphase::io::format_double(a), qphase::io::format_double(rep.mean_n),
         qphase::io::format_double(rep.var_n),
         qphase::io::format_double(rep.sin_mean),
         qphase::io::format_double(rep.cos_mean),
         qphase::io::format_double(rep.sin_var),
         qphase::io::format_double(rep.cos_var),
         rep.u ? qphase::io::format_double(*rep.u) : "undefined",
         qphase::io::format_double(rep.s),
         rep.q ? qphase::io::format_double(*rep.q) : "undefined"});
  }
  emit(table, opt);
}

void run_dispersion(const Options& opt) {
  qphase::io::Table table;
  table.header = base_header("dispersion", opt);
  const unsigned count = parse_count_range(opt.count).front();
  table.header["spec"] =
      qphase::io::spec_to_json(make_spec(opt, count, opt.alpha));
  table.columns = {"alpha", "dispersion"};
  for (double a : scan_alphas(opt)) {
    const qphase::BuiltState built = qphase::build_state(make_spec(opt, count, a));
    table.rows.push_back(
        {qphase::io::format_double(a),
         qphase::io::format_double(qphase::phase_dispersion(built.state))});
  }
  emit(table, opt);
}

void run_estimate(const Options& opt) {
  const unsigned count = parse_count_range(opt.count).front();
  const qphase::StateSpec spec = make_spec(opt, count, opt.alpha);
  const qphase::BuiltState built = qphase::build_state(spec);

  std::vector<double> grid(opt.phi_points);
  const double lo = 0.05, hi = std::numbers::pi - 0.05;
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(grid.size() - 1);
  const qphase::PhaseSensitivity ps = qphase::phase_uncertainty(built.state, grid);

  qphase::io::Table table;
  table.header = base_header("estimate", opt);
  table.header["spec"] = qphase::io::spec_to_json(spec);
  table.header["method"] = "direct_moments";
  table.columns = {"phi", "var_jz", "slope", "delta_phi"};
  for (std::size_t i = 0; i < ps.phi.size(); ++i)
    table.rows.push_back({qphase::io::format_double(ps.phi[i]),
                          qphase::io::format_double(ps.var_jz[i]),
                          qphase::io::format_double(ps.slope[i]),
                          qphase::io::format_double(ps.delta_phi[i])});
  emit(table, opt);
}

int run_verify(const Options& opt) {
  const bool quick = opt.suite == "quick";
  const qphase::VerificationReport oracle =
      qphase::run_oracle_suite(quick ? 12 : 60);
  const qphase::VerificationReport cutoff =
      qphase::run_cutoff_convergence(quick ? 6 : 20);

  qphase::io::Table table;
  table.header = base_header("verify", opt);
  table.header["suite"] = opt.suite;
  table.columns = {"category", "checks", "failures", "max_err", "tolerance"};
  for (const auto* report : {&oracle, &cutoff})
    for (const qphase::CheckResult& c : report->categories)
      table.rows.push_back({c.name, std::to_string(c.checks),
                            std::to_string(c.failures),
                            qphase::io::format_double(c.max_err),
                            qphase::io::format_double(c.tolerance)});
  emit(table, opt);

  const std::size_t failures = oracle.total_failures() + cutoff.total_failures();
  std::cerr << "verify: " << (oracle.total_checks() + cutoff.total_checks())
            << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

// Flat key=value config: `command` picks the subcommand, remaining keys map
// to the matching long options.
std::vector<std::string> argv_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qphase::InvalidSpecError("cannot read config file: " + path);
  std::vector<std::string> args;
  std::string command, line;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "command")
      command = value;
    else
      pairs.emplace_back(key, value);
  }
  if (command.empty())
    throw qphase::InvalidSpecError("config file: missing 'command' key");
  args.push_back(command);
  for (const auto& [key, value] : pairs) {
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-phase datasets for photon-added/subtracted displaced Fock states"};
  app.require_subcommand(0, 1);

  Options opt;
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");

  auto add_common = [&](CLI::App* sub, bool with_scan) {
    sub->add_option("--kind", opt.kind, "add|subtract")->capture_default_str();
    sub->add_option("--count", opt.count, "photon count, single or lo..hi")
        ->capture_default_str();
    sub->add_option("--n", opt.fock_n, "Fock parameter")->capture_default_str();
    sub->add_option("--alpha", opt.alpha, "|alpha|")->capture_default_str();
    sub->add_option("--theta2", opt.theta2, "displacement phase (rad)")
        ->capture_default_str();
    sub->add_option("--grid", opt.grid, "theta grid size")->capture_default_str();
    sub->add_option("--out", opt.out, "output path, - for stdout")
        ->capture_default_str();
    sub->add_option("--format", opt.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_scan)
      sub->add_option("--alpha-scan", opt.alpha_scan, "|alpha| scan lo:hi:step");
  };

  CLI::App* cmd_phase = app.add_subcommand("phase-dist", "phase distribution P(theta)");
  add_common(cmd_phase, false);
  CLI::App* cmd_angq = app.add_subcommand("angular-q", "angular Q distribution");
  add_common(cmd_angq, false);
  CLI::App* cmd_fluct = app.add_subcommand("fluctuation", "Carruthers-Nieto parameters");
  add_common(cmd_fluct, true);
  CLI::App* cmd_disp = app.add_subcommand("dispersion", "phase dispersion D");
  add_common(cmd_disp, true);
  CLI::App* cmd_est = app.add_subcommand("estimate", "Mach-Zehnder delta-phi");
  add_common(cmd_est, false);
  cmd_est->add_option("--phi-points", opt.phi_points, "phi grid size")
      ->capture_default_str();
  CLI::App* cmd_verify = app.add_subcommand("verify", "oracle cross-check report");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--suite", opt.suite, "full|quick")
      ->check(CLI::IsMember({"full", "quick"}))
      ->capture_default_str();

  try {
    try {
      app.parse(argc, argv);
      if (!config_path.empty() && app.get_subcommands().empty()) {
        std::vector<std::string> args = argv_from_config(config_path);
        std::vector<const char*> cargv{argv[0]};
        for (const std::string& a : args) cargv.push_back(a.c_str());
        CLI::App* chosen = app.get_subcommand(args.front());
        (void)chosen;
        app.clear();
        app.parse(static_cast<int>(cargv.size()),
                  const_cast<char**>(cargv.data()));
      }
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? 0 : kExitInvalidSpec;
    }

    if (cmd_phase->parsed()) run_distribution_command("phase-dist", opt);
    else if (cmd_angq->parsed()) run_distribution_command("angular-q", opt);
    else if (cmd_fluct->parsed()) run_fluctuation(opt);
    else if (cmd_disp->parsed()) run_dispersion(opt);
    else if (cmd_est->parsed()) run_estimate(opt);
    else if (cmd_verify->parsed()) return run_verify(opt);
    else {
      std::cerr << app.help();
      return kExitInvalidSpec;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const qphase::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const qphase::ZeroStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitZeroState;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
