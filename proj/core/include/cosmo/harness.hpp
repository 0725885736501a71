#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosmo/engine.hpp"

namespace cosmo {

enum class ExperimentKind { Survival, DelayContrast };

struct DevelopmentStage {
  std::string name;
  ResourceVector resources;
};

/// Non-paper presets: low=[1]*5, medium=[10]*5, high=[100]*5.
std::vector<DevelopmentStage> default_stages();

/// Experiment description. `base` is a UniverseConfig document; each variant
/// is a JSON merge patch applied on top of it (no variants means one empty
/// patch). Run r of a cell is seeded with base_seed + r.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::Survival;
  Json base = Json::object();
  std::vector<Json> variants;
  int repetitions = 1;
  std::uint64_t base_seed = 0;
  int jobs = 1;
  std::filesystem::path base_dir;  // resolves relative paths inside `base`

  // Survival only.
  std::string subject = "Earth";
  std::vector<DevelopmentStage> stages = default_stages();
  std::vector<std::size_t> sizes{3, 5};
  int rounds = 10;
  int max_distance = 4;
  /// Explicit roster subsets per size; by default the subject, the first
  /// militarist, then the remaining civs in roster order.
  std::map<std::size_t, std::vector<CivName>> constellations;

  void validate() const;
};

/// Reads {"kind": "survival"|"delay", "base": {...} | "base_config": path,
/// "variants", "repetitions", "base_seed", "jobs", "subject", "stages",
/// "sizes", "rounds", "max_distance", "constellations"}.
ExperimentSpec spec_from_json(const Json& j, const std::filesystem::path& base_dir = {});
ExperimentSpec load_spec(const std::filesystem::path& path);

struct RunFailure {
  std::uint64_t seed = 0;
  std::string error;
};

struct SurvivalCell {
  std::size_t variant = 0;
  std::string stage;
  std::size_t size = 0;
  int repetitions = 0;
  int survived = 0;
  std::vector<RunFailure> failures;

  int completed() const { return repetitions - static_cast<int>(failures.size()); }
  /// Percentage of completed runs in which the subject is alive at the end.
  std::optional<double> survival_rate_pct() const;
};

struct SurvivalReport {
  std::vector<SurvivalCell> cells;  // variant, stage, then size order
};

SurvivalReport run_experiment_survival(const ExperimentSpec& spec);

struct MetricsRow {
  int compared = 0;
  int public_changed = 0;
  int private_changed = 0;
  int worldview_changed = 0;

  double public_action_change_pct() const;
  double private_action_change_pct() const;
  double worldview_change_pct() const;
};

/// Rows keyed by the worldview the civilization held in the real-time run.
struct MetricsTable {
  std::map<Worldview, MetricsRow> rows;
  std::vector<RunFailure> failures;
};

/// Compares two runs of the same configuration record by record.
void accumulate_metrics(MetricsTable& table, const std::vector<StickRecord>& realtime,
                        const std::vector<StickRecord>& delayed);

MetricsTable run_experiment_delay_contrast(const ExperimentSpec& spec);

/// CSV headers are fixed; see docs/formats.md.
std::string survival_csv(const SurvivalReport& report);
std::string metrics_csv(const MetricsTable& table);

/// Files written by one run:
///   sticks/<civ>.jsonl, maps/round_<N>.dot, relationships.jsonl,
///   summary.json and, when LLM agents ran, transcript.jsonl.
struct RunOutputs {
  int rounds_played = 0;
};

/// Steps the universe to completion, writing outputs into `out_dir` as it
/// goes. On OverflowError the archive of completed rounds is flushed before
/// the exception propagates.
RunOutputs run_to_directory(const UniverseConfig& config, const std::filesystem::path& out_dir,
                            std::shared_ptr<const Transcript> replay_from = nullptr);

std::string stick_file_name(const CivName& name);

/// Production capability after each round; round 0 holds the initial values.
/// Columns: round,<civ>...
std::string growth_csv(const UniverseConfig& config);

/// {"name", "worldview", "resources", "last_matrix", "discovered",
///  "cooperation_active", "pending_offers"}; all but "worldview" optional.
CivSnapshot snapshot_from_json(const Json& j);

/// DOT for `round`, read back from a run directory.
std::string export_map_from_run(const std::filesystem::path& run_dir, int round);

}  // namespace cosmo
