#pragma once

// Decision text format exchanged with civilization agents.
//
// A decision is a sequence of bracketed fields, each header written as
// `[Field Name: ]` and followed by free text up to the next known header:
//
//   [Political System: ] militarism
//   [Political System Reason: ] ...
//   [Transfer Matrix: ]
//   [2.5, 0.0, 0.0, 0.0, 0.0;
//    ...
//    0.0, 0.0, 0.0, 0.0, 1.2]
//   [Transfer Matrix Reason: ] ...
//   [Public Action: ] launch_annihilation_war towards civilization Earth
//   [Private Action: ] War mobilization
//   [Action Reason: ] ...
//   [Other Information: ] ...
//   [Discovered Civilization: ] Earth
//
// Fields may appear in any order. Text outside known headers is ignored.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cosmo/model.hpp"

namespace cosmo {

namespace field {
inline constexpr std::string_view kPoliticalSystem = "Political System";
inline constexpr std::string_view kPoliticalSystemReason = "Political System Reason";
inline constexpr std::string_view kTransferMatrix = "Transfer Matrix";
inline constexpr std::string_view kTransferMatrixReason = "Transfer Matrix Reason";
inline constexpr std::string_view kPublicAction = "Public Action";
inline constexpr std::string_view kPrivateAction = "Private Action";
inline constexpr std::string_view kActionReason = "Action Reason";
inline constexpr std::string_view kOtherInformation = "Other Information";
inline constexpr std::string_view kDiscoveredCivilization = "Discovered Civilization";
}  // namespace field

enum class ParseErrorKind {
  MissingField,
  MatrixShape,
  UnknownWorldview,
  UnknownAction,
  UnknownCivilization,
};

std::string_view to_string(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind;
  std::string field;   // header the problem was found under
  std::string detail;  // human readable explanation
  std::string span;    // offending text, verbatim

  std::string message() const;
};

template <class T>
class ParseResult {
 public:
  ParseResult(T value) : data_(std::move(value)) {}
  ParseResult(ParseError error) : data_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(data_); }
  T& value() { return std::get<T>(data_); }
  const ParseError& error() const { return std::get<ParseError>(data_); }

 private:
  std::variant<T, ParseError> data_;
};

/// Full decision parse. `known_civs` are the names the actor has discovered;
/// any action aimed elsewhere is an UnknownCivilization error.
ParseResult<Decision> parse_decision(std::string_view raw,
                                     const std::vector<CivName>& known_civs);

struct ActionFields {
  std::vector<PublicAction> public_actions;
  PrivateAction private_action = PrivateAction::DoNothing;
};

/// Parses only the action headers. Used for log excerpts that carry actions
/// but no political system or matrix.
ParseResult<ActionFields> parse_action_fields(std::string_view raw,
                                              const std::vector<CivName>& known_civs);

/// Parses the body of a `[Transfer Matrix: ]` field.
ParseResult<TransferMatrix> parse_matrix_text(std::string_view text);

std::string render_decision(const Decision& d);

/// Renders a diagonal matrix as the 5x5 bracketed text agents emit.
std::string format_matrix(const TransferMatrix& m);
std::string format_public_action(const PublicAction& a);
std::string format_private_action(PrivateAction a);
/// Shortest decimal text that parses back to the same double, always with a
/// fractional part or exponent ("2.0", "1.8", "1e+300").
std::string format_real(double v);

/// One round of some civilization's archive as it appears in a prompt.
/// Entries describing the present moment carry resources and worldview only.
struct HistoryEntry {
  int round = 0;
  ResourceVector resources;
  std::optional<Worldview> worldview;
  std::optional<TransferMatrix> matrix;
  std::vector<PublicAction> public_actions;
  std::optional<PrivateAction> private_action;
  bool current = false;
};

struct DiscoveredHistory {
  CivName name;
  std::vector<HistoryEntry> history;
};

struct PromptContext {
  std::vector<HistoryEntry> history;
  Worldview worldview = Worldview::Pacifism;
  std::vector<DiscoveredHistory> discovered;
  int round = 1;
  /// Secretary feedback from the previous attempt of the same round.
  std::optional<std::string> previous_rejection;
};

std::string render_history(const std::vector<HistoryEntry>& history);
std::string render_discovered(const std::vector<DiscoveredHistory>& discovered);

/// The civilization agent prompt with history, worldview and discoveries filled in.
std::string build_cosmo_prompt(const PromptContext& ctx);

/// The reviewer prompt used when an LLM acts as secretary.
std::string build_secretary_prompt(Worldview worldview, const Decision& decision);

struct SecretaryReply {
  bool approved = false;
  std::string reason;
};

/// Reads `[Verification:] Yes/No` and `[Rejection Reason:]` from a reviewer reply.
ParseResult<SecretaryReply> parse_secretary_reply(std::string_view text);

}  // namespace cosmo
