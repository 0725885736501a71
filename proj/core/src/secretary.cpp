#include "cosmo/secretary.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosmo {
namespace {

RejectionCode code_for(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MissingField: return RejectionCode::MissingField;
    case ParseErrorKind::MatrixShape: return RejectionCode::MatrixShape;
    case ParseErrorKind::UnknownWorldview: return RejectionCode::UnknownWorldview;
    case ParseErrorKind::UnknownAction: return RejectionCode::UnknownAction;
    case ParseErrorKind::UnknownCivilization: return RejectionCode::UnknownTarget;
  }
  return RejectionCode::UnknownAction;
}

bool contains(const std::vector<CivName>& names, const CivName& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<SecretaryVerdict> check_admissibility(const Decision& d, const CivSnapshot& s) {
  for (const auto& action : d.public_actions) {
    auto who = counterpart(action);
    if (!who) continue;
    if (!contains(s.discovered, *who)) {
      return SecretaryVerdict::reject(RejectionCode::UnknownTarget,
                                      "unknown target " + *who);
    }
    if (is_war(action) && !(s.resources.military() > 0.0)) {
      return SecretaryVerdict::reject(RejectionCode::WarWithoutMilitary,
                                      "war declared on " + *who + " with no military capability");
    }
    if (std::holds_alternative<RejectCooperation>(action) && !contains(s.pending_offers, *who)) {
      return SecretaryVerdict::reject(RejectionCode::NoPendingOffer,
                                      "no pending cooperation offer from " + *who);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(RejectionCode code) {
  switch (code) {
    case RejectionCode::MissingField: return "missing_field";
    case RejectionCode::MatrixShape: return "matrix_shape";
    case RejectionCode::UnknownWorldview: return "unknown_worldview";
    case RejectionCode::UnknownAction: return "unknown_action";
    case RejectionCode::UnknownTarget: return "unknown_target";
    case RejectionCode::MatrixViolation: return "matrix_violation";
    case RejectionCode::WarWithoutMilitary: return "war_without_military";
    case RejectionCode::NoPendingOffer: return "no_pending_offer";
    case RejectionCode::DoctrineViolation: return "doctrine_violation";
    case RejectionCode::ReviewerRejected: return "reviewer_rejected";
  }
  return "unknown";
}

const std::vector<RejectionCode>& all_rejection_codes() {
  static const std::vector<RejectionCode> codes{
      RejectionCode::MissingField,     RejectionCode::MatrixShape,
      RejectionCode::UnknownWorldview, RejectionCode::UnknownAction,
      RejectionCode::UnknownTarget,    RejectionCode::MatrixViolation,
      RejectionCode::WarWithoutMilitary, RejectionCode::NoPendingOffer,
      RejectionCode::DoctrineViolation, RejectionCode::ReviewerRejected,
  };
  return codes;
}

SecretaryVerdict SecretaryVerdict::reject(RejectionCode code, std::string_view detail) {
  return {false, code, std::string(to_string(code)) + ": " + std::string(detail)};
}

CivSnapshot snapshot_of(const Observation& obs) {
  CivSnapshot s;
  s.name = obs.self;
  s.worldview = obs.worldview;
  s.resources = obs.resources;
  s.last_matrix = obs.last_matrix;
  s.discovered = obs.discovered_names();
  s.cooperation_active = !obs.pact_partners.empty();
  s.pending_offers = obs.pending_offers;
  return s;
}

ValidationOutcome validate(std::string_view raw, const CivSnapshot& snapshot,
                           const Reviewer* reviewer) {
  auto parsed = parse_decision(raw, snapshot.discovered);
  if (!parsed) {
    return {SecretaryVerdict::reject(code_for(parsed.error().kind), parsed.error().message()),
            std::nullopt};
  }
  const Decision& d = parsed.value();

  if (reviewer != nullptr && *reviewer) {
    auto reply = parse_secretary_reply((*reviewer)(build_secretary_prompt(d.worldview, d)));
    if (!reply) {
      return {SecretaryVerdict::reject(RejectionCode::ReviewerRejected,
                                       "unreadable reviewer reply: " + reply.error().message()),
              std::nullopt};
    }
    if (!reply.value().approved) {
      return {SecretaryVerdict::reject(RejectionCode::ReviewerRejected, reply.value().reason),
              std::nullopt};
    }
  }

  // The parser only yields the three known worldviews; kept as an explicit step.
  if (d.worldview != Worldview::Pacifism && d.worldview != Worldview::Militarism &&
      d.worldview != Worldview::Isolationism) {
    return {SecretaryVerdict::reject(RejectionCode::UnknownWorldview, "unknown political system"),
            std::nullopt};
  }

  const ConstraintRegime regime =
      matrix_regime({d.private_action, d.public_actions, snapshot.cooperation_active});
  if (auto check = check_matrix(d.matrix, regime); !check.accepted()) {
    return {SecretaryVerdict::reject(RejectionCode::MatrixViolation, check.reason), std::nullopt};
  }

  if (auto rejected = check_admissibility(d, snapshot)) return {*rejected, std::nullopt};

  if (d.worldview == Worldview::Pacifism &&
      std::any_of(d.public_actions.begin(), d.public_actions.end(), is_war)) {
    return {SecretaryVerdict::reject(RejectionCode::DoctrineViolation,
                                     "action inconsistent with pacifism (annihilation war)"),
            std::nullopt};
  }
  return {SecretaryVerdict::approve(), d};
}

Decision default_decision(const CivSnapshot& snapshot) {
  Decision d;
  d.worldview = snapshot.worldview;
  d.matrix = snapshot.last_matrix;
  if (!snapshot.discovered.empty()) d.public_actions.emplace_back(DoNothing{});
  d.private_action = PrivateAction::DoNothing;
  d.discovered_names = snapshot.discovered;
  d.worldview_reason = "default protocol: previous political system retained";
  d.matrix_reason = "default protocol: previous transfer matrix retained";
  d.action_reason = "default protocol: no strategic alteration";
  return d;
}

ApprovedDecision validate_with_retries(Agent& agent, Observation obs, const CivSnapshot& snapshot,
                                       const SecretaryOptions& options) {
  if (options.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
  const Reviewer* reviewer = options.reviewer ? &options.reviewer : nullptr;

  ApprovedDecision result;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    obs.attempt = attempt;
    result.attempts = attempt;
    const std::string raw = agent.decide(obs);
    auto outcome = validate(raw, snapshot, reviewer);
    if (outcome.verdict.approved) {
      result.decision = std::move(*outcome.decision);
      return result;
    }
    obs.previous_rejection = outcome.verdict.rejection_reason;
    result.rejections.push_back(std::move(outcome.verdict));
  }

  result.defaulted = true;
  result.decision = default_decision(snapshot);
  const auto& d = result.decision;
  const ConstraintRegime regime =
      matrix_regime({d.private_action, d.public_actions, snapshot.cooperation_active});
  if (auto check = check_matrix(d.matrix, regime); !check.accepted()) {
    result.warning = "retained matrix not admissible under " + std::string(to_string(regime)) +
                     " regime: " + check.reason;
  }
  return result;
}

}  // namespace cosmo
