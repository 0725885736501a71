#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosmo/agents.hpp"
#include "cosmo/model.hpp"
#include "cosmo/protocol.hpp"

namespace cosmo {

/// Why a decision was rejected. Reason texts always start with `<code>: `.
enum class RejectionCode {
  MissingField,
  MatrixShape,
  UnknownWorldview,
  UnknownAction,
  UnknownTarget,
  MatrixViolation,
  WarWithoutMilitary,
  NoPendingOffer,
  DoctrineViolation,
  ReviewerRejected,
};

std::string_view to_string(RejectionCode code);
const std::vector<RejectionCode>& all_rejection_codes();

struct SecretaryVerdict {
  bool approved = false;
  std::optional<RejectionCode> code;
  std::string rejection_reason;  // empty iff approved

  static SecretaryVerdict approve() { return {true, std::nullopt, {}}; }
  static SecretaryVerdict reject(RejectionCode code, std::string_view detail);
};

/// What the secretary knows about the acting civilization.
struct CivSnapshot {
  CivName name;
  Worldview worldview = Worldview::Pacifism;
  ResourceVector resources;
  TransferMatrix last_matrix = TransferMatrix::uniform(1.8);
  std::vector<CivName> discovered;
  bool cooperation_active = false;
  std::vector<CivName> pending_offers;
};

CivSnapshot snapshot_of(const Observation& obs);

/// Sends a reviewer prompt to an LLM and returns its raw reply.
using Reviewer = std::function<std::string(const std::string& prompt)>;

struct ValidationOutcome {
  SecretaryVerdict verdict;
  std::optional<Decision> decision;  // present iff approved
};

/// Parse, worldview, matrix, admissibility and doctrine checks, in that order.
/// With a reviewer the LLM verdict is consulted after parsing and the
/// programmatic checks still run afterwards.
ValidationOutcome validate(std::string_view raw, const CivSnapshot& snapshot,
                           const Reviewer* reviewer = nullptr);

/// Keeps worldview and matrix, takes no action.
Decision default_decision(const CivSnapshot& snapshot);

struct SecretaryOptions {
  int max_attempts = 3;
  Reviewer reviewer;  // empty: programmatic secretary only
};

struct ApprovedDecision {
  Decision decision;
  int attempts = 0;
  bool defaulted = false;
  std::vector<SecretaryVerdict> rejections;
  /// Set when a retained matrix is not admissible under the round's regime.
  std::optional<std::string> warning;
};

/// Queries the agent until a decision is approved or `max_attempts` rejections
/// have accumulated, feeding each rejection reason into the next observation.
/// AgentBackendError propagates.
ApprovedDecision validate_with_retries(Agent& agent, Observation obs, const CivSnapshot& snapshot,
                                       const SecretaryOptions& options = {});

}  // namespace cosmo
