// cosmo: command-line front end for the simulation harness.
//
// Exit codes: 0 success, 1 runtime error, 2 decision rejected, 3 bad arguments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cosmo/harness.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kRejected = 2;
constexpr int kBadArguments = 3;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cosmo::IOError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cosmo::IOError("cannot write " + path.string());
  out << text;
}

struct RunArgs {
  std::string config;
  std::string out;
  std::string transcript;
  std::optional<int> rounds;
  std::optional<std::uint64_t> seed;
};

cosmo::UniverseConfig load_with_overrides(const RunArgs& a) {
  auto cfg = cosmo::load_config(a.config);
  if (a.rounds) cfg.rounds = *a.rounds;
  if (a.seed) cfg.seed = *a.seed;
  cfg.validate();
  return cfg;
}

int cmd_run(const RunArgs& a) {
  const auto cfg = load_with_overrides(a);
  const auto result = cosmo::run_to_directory(cfg, a.out);
  std::cout << "rounds played: " << result.rounds_played << "\noutput: " << a.out << '\n';
  return kOk;
}

int cmd_replay(const RunArgs& a) {
  const auto cfg = load_with_overrides(a);
  auto transcript = std::make_shared<const cosmo::Transcript>(cosmo::Transcript::load(a.transcript));
  const auto result = cosmo::run_to_directory(cfg, a.out, transcript);
  std::cout << "rounds replayed: " << result.rounds_played << "\noutput: " << a.out << '\n';
  return kOk;
}

int cmd_validate(const std::string& decision_path, const std::string& snapshot_path) {
  const std::string raw = read_file(decision_path);
  const auto snapshot = cosmo::snapshot_from_json(cosmo::Json::parse(read_file(snapshot_path)));
  const auto outcome = cosmo::validate(raw, snapshot);
  if (outcome.verdict.approved) {
    std::cout << "Approved\n";
    return kOk;
  }
  std::cout << "Rejected\n" << outcome.verdict.rejection_reason << '\n';
  return kRejected;
}

void report_failures(const std::vector<cosmo::RunFailure>& failures) {
  for (const auto& f : failures) std::cerr << "run with seed " << f.seed << " failed: " << f.error << '\n';
}

int cmd_experiment(bool survival, const std::string& spec_path, const std::string& out) {
  auto spec = cosmo::load_spec(spec_path);
  std::filesystem::create_directories(out);
  if (survival) {
    if (spec.kind != cosmo::ExperimentKind::Survival) {
      throw std::invalid_argument("spec kind is not 'survival'");
    }
    const auto report = cosmo::run_experiment_survival(spec);
    const auto csv = cosmo::survival_csv(report);
    for (const auto& cell : report.cells) report_failures(cell.failures);
    write_file(std::filesystem::path(out) / "survival.csv", csv);
    std::cout << csv;
  } else {
    if (spec.kind != cosmo::ExperimentKind::DelayContrast) {
      throw std::invalid_argument("spec kind is not 'delay'");
    }
    const auto table = cosmo::run_experiment_delay_contrast(spec);
    report_failures(table.failures);
    const auto csv = cosmo::metrics_csv(table);
    write_file(std::filesystem::path(out) / "delay.csv", csv);
    std::cout << csv;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delayed-information civilization simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a simulation and write its archive");
  run->add_option("--config", run_args.config, "Universe config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--rounds", run_args.rounds, "Override the round count")->check(CLI::NonNegativeNumber);
  run->add_option("--seed", run_args.seed, "Override the seed");
  run->add_option("--out", run_args.out, "Output directory")->required();

  std::string decision_path, snapshot_path;
  auto* validate = app.add_subcommand("validate", "Check one decision text against a snapshot");
  validate->add_option("--decision", decision_path, "Raw decision text")->required()->check(CLI::ExistingFile);
  validate->add_option("--snapshot", snapshot_path, "Civilization snapshot (JSON)")->required()->check(CLI::ExistingFile);

  RunArgs replay_args;
  auto* replay = app.add_subcommand("replay", "Re-run a simulation from a recorded transcript");
  replay->add_option("--transcript", replay_args.transcript, "Transcript (JSON lines)")->required()->check(CLI::ExistingFile);
  replay->add_option("--config", replay_args.config, "Universe config (JSON)")->required()->check(CLI::ExistingFile);
  replay->add_option("--rounds", replay_args.rounds, "Override the round count")->check(CLI::NonNegativeNumber);
  replay->add_option("--seed", replay_args.seed, "Override the seed");
  replay->add_option("--out", replay_args.out, "Output directory")->required();

  std::string spec_path, experiment_out;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment and write CSV tables");
  experiment->require_subcommand(1);
  auto* survival = experiment->add_subcommand("survival", "Subject survival per stage and size");
  auto* delay = experiment->add_subcommand("delay", "Real-time versus delayed decision changes");
  for (auto* sub : {survival, delay}) {
    sub->add_option("--spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", experiment_out, "Output directory")->required();
  }

  std::string stick_dir, format = "dot";
  int map_round = 0;
  auto* export_map = app.add_subcommand("export-map", "Print the relationship map of a round");
  export_map->add_option("--stick", stick_dir, "Run output directory")->required()->check(CLI::ExistingDirectory);
  export_map->add_option("--round", map_round, "Round number")->required()->check(CLI::PositiveNumber);
  export_map->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));

  RunArgs growth_args;
  std::string growth_out;
  auto* growth = app.add_subcommand("growth", "Production capability per round as CSV");
  growth->add_option("--config", growth_args.config, "Universe config (JSON)")->required()->check(CLI::ExistingFile);
  growth->add_option("--rounds", growth_args.rounds, "Override the round count")->check(CLI::NonNegativeNumber);
  growth->add_option("--seed", growth_args.seed, "Override the seed");
  growth->add_option("--out", growth_out, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*validate) return cmd_validate(decision_path, snapshot_path);
    if (*replay) return cmd_replay(replay_args);
    if (*experiment) return cmd_experiment(survival->parsed(), spec_path, experiment_out);
    if (*export_map) {
      std::cout << cosmo::export_map_from_run(stick_dir, map_round);
      return kOk;
    }
    if (*growth) {
      const auto csv = cosmo::growth_csv(load_with_overrides(growth_args));
      if (growth_out.empty()) {
        std::cout << csv;
      } else {
        write_file(growth_out, csv);
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kBadArguments;
}
