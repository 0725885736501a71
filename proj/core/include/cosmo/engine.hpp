#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosmo/agents.hpp"
#include "cosmo/model.hpp"
#include "cosmo/secretary.hpp"
#include "cosmo/stick.hpp"

namespace cosmo {

enum class DelayMode { RealTime, Delayed };
enum class WarTravel { Delayed, Instant };

std::string_view to_string(DelayMode m);
std::string_view to_string(WarTravel w);

struct CivConfig {
  CivName name;
  Worldview worldview = Worldview::Pacifism;
  ResourceVector initial_resources = ResourceVector::filled(1.0);
  TransferMatrix initial_matrix = TransferMatrix::uniform(1.8);
  AgentSpec agent;
};

struct AppreciationDeltas {
  int friendly = 1;
  int rejection = -1;
  int war = -100;
};

struct UniverseConfig {
  std::vector<CivConfig> civs;
  /// Symmetric, zero diagonal; rounds of signal travel between civilizations.
  std::vector<std::vector<int>> distances;
  DelayMode delay_mode = DelayMode::Delayed;
  WarTravel war_travel = WarTravel::Delayed;
  int rounds = 10;
  std::uint64_t seed = 0;
  AppreciationDeltas appreciation;
  DoctrineOptions doctrine;
  int max_attempts = 3;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

/// Reads the JSON config document. Relative transcript paths resolve against
/// `base_dir`. When "distances" is absent, "random_distances": {"max": D}
/// draws each pair uniformly from [1, D] using the seed.
UniverseConfig config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
UniverseConfig load_config(const std::filesystem::path& path);
Json to_json(const UniverseConfig& config);

/// Symmetric matrix with zero diagonal, entries uniform in [1, max_distance].
std::vector<std::vector<int>> random_distances(std::size_t count, int max_distance,
                                               std::uint64_t seed);

struct Relation {
  bool discovered = false;
  int understanding = 0;  // number of the other's rounds visible
  int appreciation = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Directed relations between every ordered pair of civilizations.
class RelationshipMap {
 public:
  RelationshipMap() = default;
  explicit RelationshipMap(std::vector<CivName> names);

  const std::vector<CivName>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  Relation& at(std::size_t from, std::size_t to) { return cells_.at(from * names_.size() + to); }
  const Relation& at(std::size_t from, std::size_t to) const {
    return cells_.at(from * names_.size() + to);
  }

  /// {"civs": [...], "relations": [{"from","to","understanding","appreciation"}]}
  /// listing discovered pairs only.
  Json to_json() const;
  static RelationshipMap from_json(const Json& j);

  friend bool operator==(const RelationshipMap&, const RelationshipMap&) = default;

 private:
  std::vector<CivName> names_;
  std::vector<Relation> cells_;
};

/// Graphviz digraph: one node per civilization, one edge per discovered
/// ordered pair labelled "d=<distance>, u=<understanding>, a=<appreciation>".
/// Nodes and edges are sorted by name.
std::string export_relationship_dot(const RelationshipMap& map,
                                    const std::vector<std::vector<int>>& distances);

enum class EffectKind { Signal, WarArrival, Exposure };

/// Something in flight between two civilizations.
struct PendingEffect {
  EffectKind kind = EffectKind::Signal;
  std::size_t from = 0;
  std::size_t to = 0;
  int emitted_round = 0;
  int deliver_at = 0;
  PublicAction action = DoNothing{};  // Signal only
  bool responds_to_offer = false;     // Signal answering an offer from `to`
  std::size_t aggressor = 0;          // Exposure only
};

struct CivState {
  CivName name;
  Worldview worldview = Worldview::Pacifism;
  ResourceVector resources;
  TransferMatrix matrix = TransferMatrix::uniform(1.8);
  bool alive = true;
  int eliminated_round = 0;
  std::set<std::size_t> pending_offers;      // offers received, unanswered
  std::set<std::size_t> outstanding_offers;  // offers made, unanswered
  std::set<std::size_t> friendly_signals;
  std::set<std::size_t> attacked_by;
  std::set<std::size_t> known_aggressors;
  std::set<std::size_t> pacts;
  std::vector<StickRecord> stick;
};

struct WarResolution {
  bool void_war = false;  // attacker or defender already gone
  WarResult result = WarResult::Failure;
  double attacker_military_before = 0.0;
  double defender_military_before = 0.0;
  Attrition after;
  ResourceVector loot;
};

class Universe {
 public:
  Universe(UniverseConfig config, std::vector<std::unique_ptr<Agent>> agents,
           Reviewer reviewer = {});

  /// Builds one agent per civilization from its AgentSpec.
  static Universe from_config(UniverseConfig config, const AgentRunContext& ctx = {});

  /// Plays the next round. Throws OverflowError (earlier rounds stay archived)
  /// and AgentBackendError.
  void step_round();
  /// Steps until the configured round count or until nobody is left.
  void run();

  /// Last completed round (0 before the first step).
  int round() const { return round_; }
  bool finished() const;

  const UniverseConfig& config() const { return config_; }
  const std::vector<CivState>& civs() const { return civs_; }
  const RelationshipMap& relationships() const { return relations_; }
  const std::vector<PendingEffect>& pending() const { return pending_; }
  std::optional<std::size_t> index_of(const CivName& name) const;

  /// Effective signal delay: 0 in real-time mode.
  int distance(std::size_t i, std::size_t j) const;
  /// First round at which i can see j.
  int discovery_round(std::size_t i, std::size_t j) const;

  /// What i can see of j at `round`; nullopt until j is discovered.
  std::optional<VisibleHistory> visible_history(std::size_t i, std::size_t j, int round) const;

  /// The observation civilization i decides from in the round being played.
  Observation observe(std::size_t i, int round) const;

  /// Every record, ordered by round then civilization index.
  std::vector<StickRecord> all_records() const;

 private:
  void deliver_signals(int round);
  void deliver(const PendingEffect& effect);
  void emit_actions(std::size_t i, const Decision& d, int round);
  void resolve_due_wars(int round);
  WarResolution resolve_war(const PendingEffect& arrival, int round);
  void form_pacts(int round);
  void break_pact(std::size_t a, std::size_t b, std::string_view why);
  void log(std::size_t civ, std::string_view kind, Json payload);

  UniverseConfig config_;
  std::vector<std::unique_ptr<Agent>> agents_;
  Reviewer reviewer_;
  std::vector<CivState> civs_;
  RelationshipMap relations_;
  std::vector<PendingEffect> pending_;
  std::vector<std::pair<std::size_t, std::size_t>> pact_candidates_;  // (offerer, responder)
  std::vector<std::vector<Event>> round_events_;
  int round_ = 0;
};

}  // namespace cosmo
