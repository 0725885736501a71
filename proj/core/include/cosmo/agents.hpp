#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosmo/model.hpp"
#include "cosmo/protocol.hpp"
#include "cosmo/stick.hpp"

namespace cosmo {

/// State of another civilization as seen at the present moment (no light lag).
struct ObservedState {
  ResourceVector resources;
  Worldview worldview = Worldview::Pacifism;
};

/// What one civilization can see of another: archive rounds whose light has
/// arrived, plus the live state when the two are in real-time contact.
struct VisibleHistory {
  std::vector<StickRecord> records;
  std::optional<ObservedState> current;
  int last_visible_round = 0;

  bool has_data() const { return current.has_value() || !records.empty(); }
  bool eliminated() const;
  std::optional<ResourceVector> latest_resources() const;
  std::optional<Worldview> latest_worldview() const;
};

struct OtherView {
  CivName name;
  VisibleHistory history;
  int staleness = 0;        // current round minus last visible round
  int discovered_round = 0; // first round this civilization was visible
};

/// Everything a civilization agent is allowed to know when deciding.
struct Observation {
  CivName self;
  int round = 1;
  Worldview worldview = Worldview::Pacifism;
  ResourceVector resources;
  TransferMatrix last_matrix = TransferMatrix::uniform(1.8);
  std::vector<StickRecord> self_history;
  std::vector<OtherView> others;              // discovered civilizations, index order
  std::vector<CivName> pending_offers;        // cooperation offers awaiting our answer
  std::vector<CivName> outstanding_offers;    // our offers awaiting an answer
  std::vector<CivName> friendly_signals;      // civs whose friendly signals reached us
  std::vector<CivName> attacked_by;           // civs whose strikes reached us
  std::vector<CivName> known_aggressors;      // exposed attackers, including attacked_by
  std::vector<CivName> pact_partners;
  std::optional<std::string> previous_rejection;
  int attempt = 1;

  std::vector<CivName> discovered_names() const;
  const OtherView* find(const CivName& name) const;
  PromptContext prompt_context() const;
};

enum class BackendErrorCategory { Timeout, Http, Malformed, Exhausted };

std::string_view to_string(BackendErrorCategory c);

/// Transport-level failure of an agent backend (never a content rejection).
class AgentBackendError : public std::runtime_error {
 public:
  AgentBackendError(BackendErrorCategory category, const std::string& what, int status = 0)
      : std::runtime_error(what), category_(category), status_(status) {}
  BackendErrorCategory category() const { return category_; }
  int status() const { return status_; }

 private:
  BackendErrorCategory category_;
  int status_;
};

class Agent {
 public:
  virtual ~Agent() = default;
  /// Returns raw decision text. Throws AgentBackendError on transport failure.
  virtual std::string decide(const Observation& obs) = 0;
};

struct DoctrineOptions {
  int observation_window = 2;
};

/// Canonical matrices the doctrine agents use for each regime.
namespace doctrine_matrix {
TransferMatrix balanced();      // 1.8 everywhere, sum 9.0
TransferMatrix mobilization();  // military 3.0, others 1.5, sum 9.0
TransferMatrix cooperation();   // military 1.5, others 2.125, sum 10.0
}  // namespace doctrine_matrix

/// Rule-based decision for a worldview. Pure function of its inputs.
Decision doctrine_policy(Worldview worldview, const Observation& obs,
                         const DoctrineOptions& options = {});

class DoctrineAgent final : public Agent {
 public:
  explicit DoctrineAgent(DoctrineOptions options = {}) : options_(options) {}
  std::string decide(const Observation& obs) override;

 private:
  DoctrineOptions options_;
};

/// Serves fixed texts per round; attempts within a round consume the list in order
/// and the last entry repeats. Rounds without an entry use `fallback`.
class ScriptedAgent final : public Agent {
 public:
  using Script = std::map<int, std::vector<std::string>>;
  ScriptedAgent(Script script, std::optional<std::string> fallback);
  std::string decide(const Observation& obs) override;

 private:
  Script script_;
  std::optional<std::string> fallback_;
};

/// Adapter for tests and harness-injected behaviours.
class FunctionAgent final : public Agent {
 public:
  using Fn = std::function<std::string(const Observation&)>;
  explicit FunctionAgent(Fn fn) : fn_(std::move(fn)) {}
  std::string decide(const Observation& obs) override { return fn_(obs); }

 private:
  Fn fn_;
};

struct EndpointConfig {
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4";
  std::string api_key_env = "OPENAI_API_KEY";
  double timeout_s = 60.0;
  int max_retries = 2;
  int backoff_ms = 500;
  double temperature = 0.0;
};

/// One chat-completion round trip. Retries transient failures with exponential
/// backoff. Throws AgentBackendError.
std::string llm_complete(const EndpointConfig& endpoint, const std::string& prompt);

struct TranscriptEntry {
  int round = 0;
  CivName civ;
  std::string prompt_hash;
  std::string completion;
};

/// 64-bit FNV-1a of the prompt, as 16 lowercase hex digits.
std::string prompt_hash(std::string_view prompt);

/// JSON-lines transcript of completions: {round, civ, prompt_hash, completion}.
class Transcript {
 public:
  Transcript() = default;
  /// Appends to `path` as entries are recorded.
  explicit Transcript(std::filesystem::path path);

  void record(TranscriptEntry entry);
  const std::vector<TranscriptEntry>& entries() const { return entries_; }

  static Transcript load(const std::filesystem::path& path);

 private:
  std::optional<std::filesystem::path> path_;
  std::vector<TranscriptEntry> entries_;
};

class LlmAgent final : public Agent {
 public:
  LlmAgent(EndpointConfig endpoint, std::shared_ptr<Transcript> transcript);
  std::string decide(const Observation& obs) override;

 private:
  EndpointConfig endpoint_;
  std::shared_ptr<Transcript> transcript_;
};

/// Serves recorded completions for its civilization in recorded order per round.
class ReplayAgent final : public Agent {
 public:
  ReplayAgent(std::shared_ptr<const Transcript> transcript, CivName civ);
  std::string decide(const Observation& obs) override;

 private:
  std::shared_ptr<const Transcript> transcript_;
  CivName civ_;
  std::map<int, std::size_t> served_;
};

enum class AgentKind { Doctrine, Llm, Replay, Scripted };

struct AgentSpec {
  AgentKind kind = AgentKind::Doctrine;
  EndpointConfig endpoint;
  std::optional<std::filesystem::path> transcript;
  ScriptedAgent::Script script;
  std::optional<std::string> script_fallback;
};

/// Shared per-run resources handed to agent construction.
struct AgentRunContext {
  DoctrineOptions doctrine;
  std::shared_ptr<Transcript> record_to;               // LLM completions land here
  std::shared_ptr<const Transcript> replay_from;       // overrides per-spec transcripts
};

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const CivName& civ,
                                  const AgentRunContext& ctx);

}  // namespace cosmo
