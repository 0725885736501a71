#include "cosmo/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cosmo {
namespace {

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<T> out(count);
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < count; start += width) {
    const std::size_t end = std::min(count, start + width);
    if (width == 1) {
      out[start] = fn(start);
      continue;
    }
    std::vector<std::future<T>> batch;
    for (std::size_t k = start; k < end; ++k) batch.push_back(std::async(std::launch::async, fn, k));
    for (std::size_t k = start; k < end; ++k) out[k] = batch[k - start].get();
  }
  return out;
}

std::string pct_text(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, end);
}

std::vector<Json> effective_variants(const ExperimentSpec& spec) {
  return spec.variants.empty() ? std::vector<Json>{Json::object()} : spec.variants;
}

Json patched(const Json& base, const Json& patch) {
  Json doc = base;
  doc.merge_patch(patch);
  return doc;
}

std::vector<std::size_t> constellation_indices(const ExperimentSpec& spec, const Json& roster,
                                               std::size_t size) {
  std::vector<CivName> names;
  std::vector<Worldview> views;
  for (const auto& c : roster) {
    names.push_back(c.at("name").get<std::string>());
    views.push_back(worldview_from_json(c.at("worldview")));
  }
  auto index = [&](const CivName& n) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument("unknown civilization '" + n + "'");
    return static_cast<std::size_t>(it - names.begin());
  };

  std::vector<std::size_t> chosen;
  if (auto it = spec.constellations.find(size); it != spec.constellations.end()) {
    for (const auto& n : it->second) chosen.push_back(index(n));
  } else {
    chosen.push_back(index(spec.subject));
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (views[k] == Worldview::Militarism && k != chosen.front()) {
        chosen.push_back(k);
        break;
      }
    }
    for (std::size_t k = 0; k < names.size() && chosen.size() < size; ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) chosen.push_back(k);
    }
  }
  if (chosen.size() != size) {
    throw std::invalid_argument("roster cannot supply a constellation of " + std::to_string(size));
  }
  if (std::find(chosen.begin(), chosen.end(), index(spec.subject)) == chosen.end()) {
    throw std::invalid_argument("constellation of " + std::to_string(size) + " omits " + spec.subject);
  }
  if (std::none_of(chosen.begin(), chosen.end(),
                   [&](std::size_t k) { return views[k] == Worldview::Militarism; })) {
    throw std::invalid_argument("constellation of " + std::to_string(size) +
                                " has no militarist civilization");
  }
  return chosen;
}

UniverseConfig survival_config(const ExperimentSpec& spec, const Json& doc,
                               const std::vector<std::size_t>& chosen,
                               const DevelopmentStage& stage, std::uint64_t seed) {
  Json run = doc;
  Json civs = Json::array();
  for (auto k : chosen) {
    Json c = doc.at("civs").at(k);
    if (c.at("name").get<std::string>() == spec.subject) c["resources"] = to_json(stage.resources);
    civs.push_back(std::move(c));
  }
  run["civs"] = std::move(civs);
  run["rounds"] = spec.rounds;
  run["seed"] = seed;
  if (doc.contains("distances")) {
    const auto& full = doc.at("distances");
    Json sub = Json::array();
    for (auto a : chosen) {
      Json row = Json::array();
      for (auto b : chosen) row.push_back(full.at(a).at(b));
      sub.push_back(std::move(row));
    }
    run["distances"] = std::move(sub);
  } else {
    run["distances"] = random_distances(chosen.size(), spec.max_distance, seed);
  }
  run.erase("random_distances");
  return config_from_json(run, spec.base_dir);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot write " + path.string());
  out << text;
  if (!out) throw IOError("write failed for " + path.string());
}

Json summary_json(const Universe& u, const std::optional<std::string>& error) {
  Json s = Json::object();
  s["rounds_played"] = u.round();
  if (error) s["error"] = *error;
  Json civs = Json::array();
  for (const auto& c : u.civs()) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["worldview"] = std::string(to_string(c.worldview));
    cj["alive"] = c.alive;
    if (!c.alive) cj["eliminated_round"] = c.eliminated_round;
    cj["resources"] = to_json(c.resources);
    civs.push_back(std::move(cj));
  }
  s["civs"] = std::move(civs);
  s["config"] = to_json(u.config());
  return s;
}

}  // namespace

std::vector<DevelopmentStage> default_stages() {
  return {{"low", ResourceVector::filled(1.0)},
          {"medium", ResourceVector::filled(10.0)},
          {"high", ResourceVector::filled(100.0)}};
}

void ExperimentSpec::validate() const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (!base.is_object() || !base.contains("civs")) {
    throw std::invalid_argument("experiment base config needs 'civs'");
  }
  if (kind == ExperimentKind::Survival) {
    if (stages.empty()) throw std::invalid_argument("survival needs at least one stage");
    if (sizes.empty()) throw std::invalid_argument("survival needs at least one size");
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (max_distance < 1) throw std::invalid_argument("max_distance must be >= 1");
  }
}

ExperimentSpec spec_from_json(const Json& j, const std::filesystem::path& base_dir) {
  ExperimentSpec spec;
  spec.base_dir = base_dir;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "survival") {
    spec.kind = ExperimentKind::Survival;
  } else if (kind == "delay") {
    spec.kind = ExperimentKind::DelayContrast;
  } else {
    throw std::invalid_argument("experiment kind must be 'survival' or 'delay'");
  }
  if (j.contains("base")) {
    spec.base = j.at("base");
  } else if (j.contains("base_config")) {
    std::filesystem::path p = j.at("base_config").get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    std::ifstream in(p);
    if (!in) throw IOError("cannot open base config " + p.string());
    spec.base = Json::parse(in);
    spec.base_dir = p.parent_path();
  } else {
    throw std::invalid_argument("experiment needs 'base' or 'base_config'");
  }
  if (j.contains("variants")) spec.variants = j.at("variants").get<std::vector<Json>>();
  spec.repetitions = j.value("repetitions", spec.repetitions);
  spec.base_seed = j.value("base_seed", spec.base_seed);
  spec.jobs = j.value("jobs", spec.jobs);
  spec.subject = j.value("subject", spec.subject);
  spec.rounds = j.value("rounds", spec.rounds);
  spec.max_distance = j.value("max_distance", spec.max_distance);
  if (j.contains("sizes")) spec.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  if (j.contains("stages")) {
    spec.stages.clear();
    for (const auto& [name, resources] : j.at("stages").items()) {
      spec.stages.push_back({name, resources_from_json(resources)});
    }
  }
  if (j.contains("constellations")) {
    for (const auto& [size, names] : j.at("constellations").items()) {
      spec.constellations[std::stoul(size)] = names.get<std::vector<CivName>>();
    }
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open spec " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument("spec " + path.string() + " is not valid JSON: " + e.what());
  }
  return spec_from_json(j, path.parent_path());
}

std::optional<double> SurvivalCell::survival_rate_pct() const {
  if (completed() == 0) return std::nullopt;
  return 100.0 * survived / completed();
}

SurvivalReport run_experiment_survival(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.kind != ExperimentKind::Survival) {
    throw std::invalid_argument("spec is not a survival experiment");
  }
  SurvivalReport report;
  const auto variants = effective_variants(spec);
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const Json doc = patched(spec.base, variants[v]);
    for (const auto& stage : spec.stages) {
      for (auto size : spec.sizes) {
        const auto chosen = constellation_indices(spec, doc.at("civs"), size);
        SurvivalCell cell;
        cell.variant = v;
        cell.stage = stage.name;
        cell.size = size;
        cell.repetitions = spec.repetitions;

        struct Outcome {
          bool survived = false;
          std::optional<std::string> error;
        };
        auto outcomes = parallel_map<Outcome>(
            static_cast<std::size_t>(spec.repetitions), spec.jobs, [&](std::size_t rep) {
              Outcome o;
              try {
                auto cfg = survival_config(spec, doc, chosen, stage, spec.base_seed + rep);
                Universe u = Universe::from_config(cfg);
                u.run();
                o.survived = u.civs().at(*u.index_of(spec.subject)).alive;
              } catch (const std::exception& e) {
                o.error = e.what();
              }
              return o;
            });
        for (std::size_t rep = 0; rep < outcomes.size(); ++rep) {
          if (outcomes[rep].error) {
            cell.failures.push_back({spec.base_seed + rep, *outcomes[rep].error});
          } else if (outcomes[rep].survived) {
            ++cell.survived;
          }
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

double MetricsRow::public_action_change_pct() const {
  return compared == 0 ? 0.0 : 100.0 * public_changed / compared;
}
double MetricsRow::private_action_change_pct() const {
  return compared == 0 ? 0.0 : 100.0 * private_changed / compared;
}
double MetricsRow::worldview_change_pct() const {
  return compared == 0 ? 0.0 : 100.0 * worldview_changed / compared;
}

void accumulate_metrics(MetricsTable& table, const std::vector<StickRecord>& realtime,
                        const std::vector<StickRecord>& delayed) {
  std::map<std::pair<CivName, int>, const StickRecord*> index;
  for (const auto& r : delayed) index[{r.civ, r.round}] = &r;
  for (const auto& r : realtime) {
    auto it = index.find({r.civ, r.round});
    if (it == index.end()) continue;
    const StickRecord& other = *it->second;
    MetricsRow& row = table.rows[r.worldview];
    ++row.compared;
    if (!same_public_actions(r.public_actions, other.public_actions)) ++row.public_changed;
    if (r.private_action != other.private_action) ++row.private_changed;
    if (r.worldview != other.worldview) ++row.worldview_changed;
  }
}

MetricsTable run_experiment_delay_contrast(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.kind != ExperimentKind::DelayContrast) {
    throw std::invalid_argument("spec is not a delay-contrast experiment");
  }
  const auto variants = effective_variants(spec);
  struct Pair {
    std::uint64_t seed = 0;
    std::vector<StickRecord> realtime;
    std::vector<StickRecord> delayed;
    std::optional<std::string> error;
  };
  const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
  auto pairs = parallel_map<Pair>(variants.size() * reps, spec.jobs, [&](std::size_t k) {
    Pair p;
    p.seed = spec.base_seed + k % reps;
    try {
      Json doc = patched(spec.base, variants[k / reps]);
      doc["seed"] = p.seed;
      UniverseConfig cfg = config_from_json(doc, spec.base_dir);
      cfg.delay_mode = DelayMode::RealTime;
      Universe control = Universe::from_config(cfg);
      control.run();
      cfg.delay_mode = DelayMode::Delayed;
      Universe delayed = Universe::from_config(cfg);
      delayed.run();
      p.realtime = control.all_records();
      p.delayed = delayed.all_records();
    } catch (const std::exception& e) {
      p.error = e.what();
    }
    return p;
  });

  MetricsTable table;
  for (const auto& p : pairs) {
    if (p.error) {
      table.failures.push_back({p.seed, *p.error});
      continue;
    }
    accumulate_metrics(table, p.realtime, p.delayed);
  }
  return table;
}

std::string survival_csv(const SurvivalReport& report) {
  std::ostringstream out;
  out << "variant,stage,size,repetitions,completed,failed,survived,survival_rate_pct\n";
  for (const auto& c : report.cells) {
    const auto rate = c.survival_rate_pct();
    out << c.variant << ',' << c.stage << ',' << c.size << ',' << c.repetitions << ','
        << c.completed() << ',' << c.failures.size() << ',' << c.survived << ','
        << (rate ? pct_text(*rate) : std::string()) << '\n';
  }
  return out.str();
}

std::string metrics_csv(const MetricsTable& table) {
  std::ostringstream out;
  out << "worldview,public_action_change_pct,private_action_change_pct,worldview_change_pct,"
         "compared\n";
  for (const auto& [worldview, row] : table.rows) {
    out << to_string(worldview) << ',' << pct_text(row.public_action_change_pct()) << ','
        << pct_text(row.private_action_change_pct()) << ','
        << pct_text(row.worldview_change_pct()) << ',' << row.compared << '\n';
  }
  return out.str();
}

std::string stick_file_name(const CivName& name) {
  std::string out;
  for (unsigned char c : name) {
    out += std::isalnum(c) || c == '-' ? static_cast<char>(c) : '_';
  }
  return out + ".jsonl";
}

RunOutputs run_to_directory(const UniverseConfig& config, const std::filesystem::path& out_dir,
                            std::shared_ptr<const Transcript> replay_from) {
  namespace fs = std::filesystem;
  std::set<std::string> files;
  for (const auto& c : config.civs) {
    if (!files.insert(stick_file_name(c.name)).second) {
      throw std::invalid_argument("civilization names collide as file names: " + c.name);
    }
  }
  fs::create_directories(out_dir / "sticks");
  fs::create_directories(out_dir / "maps");

  AgentRunContext ctx;
  ctx.replay_from = std::move(replay_from);
  const bool records_llm =
      !ctx.replay_from && std::any_of(config.civs.begin(), config.civs.end(), [](const CivConfig& c) {
        return c.agent.kind == AgentKind::Llm;
      });
  if (records_llm) ctx.record_to = std::make_shared<Transcript>(out_dir / "transcript.jsonl");

  Universe u = Universe::from_config(config, ctx);
  std::ofstream relations(out_dir / "relationships.jsonl", std::ios::binary | std::ios::trunc);
  if (!relations) throw IOError("cannot write " + (out_dir / "relationships.jsonl").string());

  auto flush = [&](const std::optional<std::string>& error) {
    for (const auto& c : u.civs()) write_stick(out_dir / "sticks" / stick_file_name(c.name), c.stick);
    write_text(out_dir / "summary.json", summary_json(u, error).dump(2) + "\n");
  };

  RunOutputs result;
  try {
    while (!u.finished()) {
      u.step_round();
      Json line = u.relationships().to_json();
      line["round"] = u.round();
      relations << line.dump() << '\n';
      write_text(out_dir / "maps" / ("round_" + std::to_string(u.round()) + ".dot"),
                 export_relationship_dot(u.relationships(), config.distances));
    }
  } catch (const std::exception& e) {
    relations.flush();
    flush(std::string(e.what()));
    throw;
  }
  flush(std::nullopt);
  result.rounds_played = u.round();
  return result;
}

std::string growth_csv(const UniverseConfig& config) {
  Universe u = Universe::from_config(config);
  std::ostringstream out;
  out << "round";
  for (const auto& c : u.civs()) out << ',' << c.name;
  out << '\n';
  auto row = [&] {
    out << u.round();
    for (const auto& c : u.civs()) {
      out << ',';
      if (c.alive) out << Json(c.resources[ResourceKind::ProductionCapability]).dump();
    }
    out << '\n';
  };
  row();
  while (!u.finished()) {
    u.step_round();
    row();
  }
  return out.str();
}

CivSnapshot snapshot_from_json(const Json& j) {
  CivSnapshot s;
  s.name = j.value("name", std::string("self"));
  s.worldview = worldview_from_json(j.at("worldview"));
  if (j.contains("resources")) s.resources = resources_from_json(j.at("resources"));
  if (j.contains("last_matrix")) s.last_matrix = matrix_from_json(j.at("last_matrix"));
  if (j.contains("discovered")) s.discovered = j.at("discovered").get<std::vector<CivName>>();
  s.cooperation_active = j.value("cooperation_active", false);
  if (j.contains("pending_offers")) {
    s.pending_offers = j.at("pending_offers").get<std::vector<CivName>>();
  }
  return s;
}

std::string export_map_from_run(const std::filesystem::path& run_dir, int round) {
  std::ifstream summary_in(run_dir / "summary.json");
  if (!summary_in) throw IOError("cannot open " + (run_dir / "summary.json").string());
  const Json summary = Json::parse(summary_in);
  const auto distances =
      summary.at("config").at("distances").get<std::vector<std::vector<int>>>();

  std::ifstream in(run_dir / "relationships.jsonl");
  if (!in) throw IOError("cannot open " + (run_dir / "relationships.jsonl").string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const std::exception& e) {
      throw FormatError(line_no, e.what());
    }
    if (j.value("round", -1) == round) {
      return export_relationship_dot(RelationshipMap::from_json(j), distances);
    }
  }
  throw std::out_of_range("round " + std::to_string(round) + " not present in " +
                          run_dir.string());
}

}  // namespace cosmo
