// Deterministic worldview policies.
//
// Militarism: strike the weakest civilization in real-time contact; with
// delayed information strike only when our military is at least twice what we
// last saw of the target, otherwise prepare. Always mobilized.
// Isolationism: silent until a civilization has been watched for the
// observation window, then friendly toward low-risk civilizations only.
// Pacifism: greet on first contact, offer cooperation once greeted back,
// accept every offer, never attack.
// Any doctrine mobilizes after being struck. Worldview labels never change.

#include <algorithm>

#include "cosmo/agents.hpp"

namespace cosmo {

namespace doctrine_matrix {
TransferMatrix balanced() { return TransferMatrix::uniform(1.8); }
TransferMatrix mobilization() { return TransferMatrix({3.0, 1.5, 1.5, 1.5, 1.5}); }
TransferMatrix cooperation() { return TransferMatrix({1.5, 2.125, 2.125, 2.125, 2.125}); }
}  // namespace doctrine_matrix

namespace {

bool contains(const std::vector<CivName>& names, const CivName& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

struct Target {
  const OtherView* view = nullptr;
  double military = 0.0;
};

/// Weakest candidate; ties keep index order.
const OtherView* weakest(const std::vector<Target>& candidates) {
  const Target* best = nullptr;
  for (const auto& c : candidates) {
    if (best == nullptr || c.military < best->military) best = &c;
  }
  return best ? best->view : nullptr;
}

void militarist_actions(const Observation& obs, Decision& d) {
  const double own = obs.resources.military();
  std::vector<Target> fresh;
  std::vector<Target> stale;
  for (const auto& o : obs.others) {
    if (!o.history.has_data() || o.history.eliminated()) continue;
    const double seen = o.history.latest_resources()->military();
    (o.history.current ? fresh : stale).push_back({&o, seen});
  }

  const OtherView* target = nullptr;
  if (own > 0.0) {
    target = weakest(fresh);
    if (target == nullptr) {
      std::vector<Target> beatable;
      std::copy_if(stale.begin(), stale.end(), std::back_inserter(beatable), [&](const Target& t) {
        return war_outcome(own, t.military) == WarResult::Success;
      });
      target = weakest(beatable);
    }
  }

  if (target != nullptr) {
    d.public_actions.emplace_back(LaunchAnnihilationWar{target->name});
    d.action_reason = "Civilization " + target->name +
                      " is the weakest we can observe; we strike before it can strike us.";
  } else {
    d.action_reason =
        "No observed civilization is weak enough to strike with certainty; we prepare for war.";
  }
  for (const auto& offer : obs.pending_offers) {
    if (target != nullptr && offer == target->name) continue;
    d.public_actions.emplace_back(RejectCooperation{offer});
  }
  d.private_action = PrivateAction::MobilizeForWar;
}

void isolationist_actions(const Observation& obs, Decision& d, const DoctrineOptions& options) {
  const double own = obs.resources.military();
  for (const auto& o : obs.others) {
    if (!o.history.has_data() || o.history.eliminated()) continue;
    const int watched = obs.round - o.discovered_round + 1;
    if (watched < options.observation_window) continue;
    const auto seen_view = *o.history.latest_worldview();
    const double seen_military = o.history.latest_resources()->military();
    const bool low_risk = seen_view != Worldview::Militarism &&
                          !contains(obs.known_aggressors, o.name) &&
                          seen_military <= own + kEpsilon;
    const bool offered = contains(obs.pending_offers, o.name);
    if (offered) {
      if (low_risk) {
        d.public_actions.emplace_back(InitiateCooperation{o.name});
      } else {
        d.public_actions.emplace_back(RejectCooperation{o.name});
      }
    } else if (low_risk) {
      d.public_actions.emplace_back(ExpressFriendliness{o.name});
    }
  }
  d.action_reason = d.public_actions.empty()
                        ? "We keep watching and stay hidden."
                        : "After a period of observation these civilizations appear to pose "
                          "little risk.";
}

void pacifist_actions(const Observation& obs, Decision& d) {
  for (const auto& o : obs.others) {
    if (o.history.eliminated()) continue;
    if (contains(obs.known_aggressors, o.name)) continue;
    if (contains(obs.pending_offers, o.name)) {
      d.public_actions.emplace_back(InitiateCooperation{o.name});
    } else if (contains(obs.pact_partners, o.name) || contains(obs.outstanding_offers, o.name)) {
      d.public_actions.emplace_back(ExpressFriendliness{o.name});
    } else if (contains(obs.friendly_signals, o.name)) {
      d.public_actions.emplace_back(InitiateCooperation{o.name});
    } else {
      d.public_actions.emplace_back(ExpressFriendliness{o.name});
    }
  }
  d.action_reason = "We seek mutual benefit through diplomacy and exchange.";
}

TransferMatrix matrix_for(const Decision& d, bool cooperation_active) {
  switch (matrix_regime({d.private_action, d.public_actions, cooperation_active})) {
    case ConstraintRegime::Mobilization: return doctrine_matrix::mobilization();
    case ConstraintRegime::Cooperation: return doctrine_matrix::cooperation();
    case ConstraintRegime::Default: break;
  }
  return doctrine_matrix::balanced();
}

}  // namespace

Decision doctrine_policy(Worldview worldview, const Observation& obs,
                         const DoctrineOptions& options) {
  Decision d;
  d.worldview = worldview;
  d.discovered_names = obs.discovered_names();
  d.worldview_reason = "Our doctrine remains " + std::string(to_string(worldview)) + ".";

  switch (worldview) {
    case Worldview::Militarism: militarist_actions(obs, d); break;
    case Worldview::Isolationism: isolationist_actions(obs, d, options); break;
    case Worldview::Pacifism: pacifist_actions(obs, d); break;
  }
  if (!obs.attacked_by.empty()) {
    d.private_action = PrivateAction::MobilizeForWar;
    d.other_info = "We have been attacked and must defend ourselves.";
  }
  if (d.public_actions.empty() && !obs.others.empty()) d.public_actions.emplace_back(DoNothing{});

  d.matrix = matrix_for(d, !obs.pact_partners.empty());
  switch (matrix_regime({d.private_action, d.public_actions, !obs.pact_partners.empty()})) {
    case ConstraintRegime::Mobilization:
      d.matrix_reason = "War footing: military growth at the expense of other sectors.";
      break;
    case ConstraintRegime::Cooperation:
      d.matrix_reason = "Cooperation lifts overall growth while military growth is held back.";
      break;
    case ConstraintRegime::Default:
      d.matrix_reason = "Balanced development across all resources.";
      break;
  }
  return d;
}

}  // namespace cosmo
