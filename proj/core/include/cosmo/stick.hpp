#pragma once

// The stick: a per-civilization, round-indexed archive.
//
// On disk a stick is JSON lines, one object per record, keys in this order:
//   round, civ, resources, resources_end, matrix_diag, worldview,
//   public_actions, private_action, events
// `resources` is the state the round's decision was made from; `resources_end`
// is the state after war resolution and growth.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosmo/model.hpp"
#include "cosmo/protocol.hpp"

namespace cosmo {

using Json = nlohmann::ordered_json;

namespace event {
inline constexpr std::string_view kSignalReceived = "signal_received";
inline constexpr std::string_view kWarDeclared = "war_declared";
inline constexpr std::string_view kWarResolved = "war_resolved";
inline constexpr std::string_view kWarVoid = "war_void";
inline constexpr std::string_view kEliminated = "eliminated";
inline constexpr std::string_view kExposure = "exposure";
inline constexpr std::string_view kPactFormed = "pact_formed";
inline constexpr std::string_view kPactBroken = "pact_broken";
inline constexpr std::string_view kTechSync = "tech_sync";
inline constexpr std::string_view kSecretaryRejected = "secretary_rejected";
inline constexpr std::string_view kSecretaryDefault = "secretary_default";
inline constexpr std::string_view kRetainedMatrixWarning = "retained_matrix_warning";
}  // namespace event

struct Event {
  std::string kind;
  Json payload = Json::object();

  friend bool operator==(const Event& a, const Event& b) {
    return a.kind == b.kind && a.payload == b.payload;
  }
};

struct StickRecord {
  int round = 0;
  CivName civ;
  ResourceVector resources;
  ResourceVector resources_end;
  TransferMatrix matrix = TransferMatrix::uniform(1.0);
  Worldview worldview = Worldview::Pacifism;
  std::vector<PublicAction> public_actions;
  PrivateAction private_action = PrivateAction::DoNothing;
  std::vector<Event> events;

  bool has_event(std::string_view kind) const;

  friend bool operator==(const StickRecord&, const StickRecord&) = default;
};

class IOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Json to_json(const ResourceVector& r);
Json to_json(const PublicAction& a);
Json to_json(const StickRecord& r);

ResourceVector resources_from_json(const Json& j);
TransferMatrix matrix_from_json(const Json& j);
Worldview worldview_from_json(const Json& j);
PublicAction public_action_from_json(const Json& j);
PrivateAction private_action_from_json(const Json& j);
/// Throws std::runtime_error (or a json exception) on malformed input.
StickRecord stick_record_from_json(const Json& j);

/// Writes one JSON line per record. Throws IOError.
void write_stick(const std::filesystem::path& path, const std::vector<StickRecord>& records);
/// Throws IOError when unreadable, FormatError with a 1-based line number on corrupt input.
std::vector<StickRecord> read_stick(const std::filesystem::path& path);

/// Converts records to the prompt-facing history form.
HistoryEntry to_history_entry(const StickRecord& r);

}  // namespace cosmo
