// Command-line front end: run protocols, sweep parameter grids, print
// closed-form predictions, and execute the validation-oracle suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coolsim/cli.hpp"
#include "coolsim/trace_io.hpp"

namespace {

using coolsim::kExitInvalidInput;
using coolsim::kExitRuntime;

coolsim::OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return coolsim::OutputFormat::Csv;
  if (text == "json") return coolsim::OutputFormat::Json;
  throw CLI::ValidationError("--format", "expected csv or json");
}

coolsim::CompressionMode parse_compression(const std::string& text) {
  if (text == "three_bit" || text == "subset_three_bit_sort")
    return coolsim::CompressionMode::SubsetThreeBitSort;
  if (text == "full_sort") return coolsim::CompressionMode::FullSort;
  throw CLI::ValidationError("--compression-mode", "expected three_bit or full_sort");
}

coolsim::NoeOrder parse_noe_order(const std::string& text) {
  if (text == "cms_first") return coolsim::NoeOrder::CmsThenGamma;
  if (text == "gamma_first") return coolsim::NoeOrder::GammaThenCms;
  throw CLI::ValidationError("--noe-order", "expected cms_first or gamma_first");
}

// Grid syntax start:stop:count.
void parse_grid(const std::string& text, coolsim::SweepConfig& config) {
  const auto a = text.find(':');
  const auto b = text.rfind(':');
  if (a == std::string::npos || b == a)
    throw CLI::ValidationError("--grid", "expected start:stop:count");
  config.grid_start = std::stod(text.substr(0, a));
  config.grid_stop = std::stod(text.substr(a + 1, b - a - 1));
  config.grid_count = std::stoi(text.substr(b + 1));
}

// Optional JSON config file: same keys as the long flags (without the
// leading dashes). Explicit command-line flags win on conflict.
std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_object()) throw CLI::ValidationError("--config", "expected a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else if (value.is_string()) {
      args.push_back("--" + key);
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      args.push_back("--" + key);
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number_float()) {
      args.push_back("--" + key);
      args.push_back(coolsim::format_double(value.get<double>()));
    } else {
      throw CLI::ValidationError("--config", "unsupported value for key " + key);
    }
  }
  return args;
}

// Rebuilds argv with config-file entries inserted right after the subcommand
// token, so later (explicit) flags override them under TakeLast.
std::vector<std::string> effective_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (config_path.empty()) return args;
  const auto injected = config_file_args(config_path);
  std::vector<std::string> merged;
  merged.reserve(args.size() + injected.size());
  merged.push_back(args.front());  // subcommand
  merged.insert(merged.end(), injected.begin(), injected.end());
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator for heat-bath algorithmic cooling with state-reset channels"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string protocol = "srg2";
  int n = 0;  // 0 = protocol default
  double eps_b = 0.1;
  int rounds = 50;
  double inner_tol = 1e-8;
  int inner_max = 200;
  std::string compression = "three_bit";
  std::string noe_order = "cms_first";
  std::string out_path;
  std::string format = "csv";
  std::string config_path;

  auto* run = app.add_subcommand("run", "run a protocol and write its cooling trace");
  run->add_option("--protocol", protocol, "noe|gnoe|srg2|srg3|srgn|ppa|noe_hbac");
  run->add_option("--n", n, "qubit count (defaults to the protocol minimum)");
  run->add_option("--eps-b", eps_b, "bath polarization in [0,1)");
  run->add_option("--rounds", rounds, "outer rounds to run");
  run->add_option("--inner-tol", inner_tol, "relative tolerance of nested preparations");
  run->add_option("--inner-max", inner_max, "round cap of nested preparations");
  run->add_option("--compression-mode", compression, "three_bit|full_sort");
  run->add_option("--noe-order", noe_order, "cms_first|gamma_first");
  run->add_option("--out", out_path, "output path (default: stdout)");
  run->add_option("--format", format, "csv|json");
  run->add_option("--config", config_path, "JSON config file (flags win on conflict)");

  std::vector<std::string> sweep_protocols{"srg2"};
  std::vector<int> sweep_ns{2};
  std::string grid = "0.01:0.5:10";
  double tol = 1e-10;
  int max_rounds = 200000;
  int threads = 0;

  auto* sweep = app.add_subcommand("sweep", "fixed-point sweep over a parameter grid");
  sweep->add_option("--protocols", sweep_protocols, "protocol list")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  sweep->add_option("--n", sweep_ns, "qubit count list")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  sweep->add_option("--grid", grid, "eps_b grid start:stop:count");
  sweep->add_option("--tol", tol, "fixed-point convergence tolerance");
  sweep->add_option("--max-rounds", max_rounds, "fixed-point round cap");
  sweep->add_option("--inner-tol", inner_tol, "relative tolerance of nested preparations");
  sweep->add_option("--inner-max", inner_max, "round cap of nested preparations");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
  sweep->add_option("--out", out_path, "output path (default: stdout)");
  sweep->add_option("--format", format, "csv|json");
  sweep->add_option("--config", config_path, "JSON config file (flags win on conflict)");

  std::string formula = "sr";
  int traj_k = -1;
  std::string traj_mode = "exact";

  auto* predict = app.add_subcommand("predict", "print a closed-form prediction");
  predict->add_option("--formula", formula, "ppa|sr|sr2|sr3|noe|gnoe");
  predict->add_option("--n", n, "qubit count");
  predict->add_option("--eps-b", eps_b, "bath polarization");
  predict->add_option("--k", traj_k, "round index for trajectory formulas");
  predict->add_option("--mode", traj_mode, "low_pol|exact");
  predict->add_option("--config", config_path, "JSON config file (flags win on conflict)");

  std::uint64_t seed = 12345;
  bool corrupt_kraus = false;

  auto* validate = app.add_subcommand("validate", "run the validation-oracle suite");
  validate->add_option("--seed", seed, "seed for randomized oracle inputs");
  validate->add_flag("--corrupt-kraus", corrupt_kraus,
                     "damage the Kraus set on purpose (negative control)");
  validate->add_option("--config", config_path, "JSON config file (flags win on conflict)");

  try {
    auto args = effective_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "coolsim: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (run->parsed()) {
      coolsim::RunConfig config;
      config.spec.kind = coolsim::protocol_from_name(protocol);
      switch (config.spec.kind) {
        case coolsim::ProtocolKind::Noe:
        case coolsim::ProtocolKind::SrGamma2:
          config.spec.n = n == 0 ? 2 : n;
          break;
        case coolsim::ProtocolKind::SrGamma3:
          config.spec.n = n == 0 ? 3 : n;
          break;
        default:
          config.spec.n = n == 0 ? 2 : n;
          break;
      }
      config.spec.rounds = rounds;
      config.spec.inner = {inner_tol, inner_max};
      config.spec.compression = parse_compression(compression);
      config.spec.noe_order = parse_noe_order(noe_order);
      config.eps_b = eps_b;
      config.out_path = out_path;
      config.format = parse_format(format);
      return coolsim::cmd_run(config, std::cout);
    }
    if (sweep->parsed()) {
      coolsim::SweepConfig config;
      for (const auto& name : sweep_protocols)
        config.protocols.push_back(coolsim::protocol_from_name(name));
      config.qubit_counts = sweep_ns;
      parse_grid(grid, config);
      config.tol = tol;
      config.max_rounds = max_rounds;
      config.inner = {inner_tol, inner_max};
      config.threads = threads;
      config.out_path = out_path;
      config.format = parse_format(format);
      return coolsim::cmd_sweep(config, std::cout);
    }
    if (predict->parsed()) {
      coolsim::PredictConfig config;
      config.formula = formula;
      config.n = n == 0 ? 2 : n;
      config.eps_b = eps_b;
      if (traj_k >= 0) config.k = traj_k;
      config.mode = traj_mode == "low_pol" ? coolsim::TrajectoryMode::LowPol
                                           : coolsim::TrajectoryMode::Exact;
      return coolsim::cmd_predict(config, std::cout);
    }
    if (validate->parsed()) {
      coolsim::ValidateConfig config;
      config.seed = seed;
      config.corrupt_kraus = corrupt_kraus;
      return coolsim::cmd_validate(config, std::cout);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "coolsim: invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "coolsim: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitInvalidInput;
}
