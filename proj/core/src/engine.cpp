#include "cosmo/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cosmo {
namespace {

std::vector<CivName> names_of(const std::vector<CivState>& civs, const std::set<std::size_t>& ids) {
  std::vector<CivName> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(civs[id].name);
  return out;
}

Json resources_json(const ResourceVector& r) { return to_json(r); }

}  // namespace

Universe::Universe(UniverseConfig config, std::vector<std::unique_ptr<Agent>> agents,
                   Reviewer reviewer)
    : config_(std::move(config)), agents_(std::move(agents)), reviewer_(std::move(reviewer)) {
  config_.validate();
  if (agents_.size() != config_.civs.size()) {
    throw std::invalid_argument("one agent per civilization is required");
  }
  std::vector<CivName> names;
  for (const auto& c : config_.civs) {
    CivState s;
    s.name = c.name;
    s.worldview = c.worldview;
    s.resources = c.initial_resources;
    s.matrix = c.initial_matrix;
    civs_.push_back(std::move(s));
    names.push_back(c.name);
  }
  relations_ = RelationshipMap(std::move(names));
}

Universe Universe::from_config(UniverseConfig config, const AgentRunContext& ctx) {
  AgentRunContext run_ctx = ctx;
  run_ctx.doctrine = config.doctrine;
  std::vector<std::unique_ptr<Agent>> agents;
  for (const auto& c : config.civs) agents.push_back(make_agent(c.agent, c.name, run_ctx));
  return Universe(std::move(config), std::move(agents));
}

bool Universe::finished() const {
  if (round_ >= config_.rounds) return true;
  return std::none_of(civs_.begin(), civs_.end(), [](const CivState& c) { return c.alive; });
}

void Universe::run() {
  while (!finished()) step_round();
}

std::optional<std::size_t> Universe::index_of(const CivName& name) const {
  for (std::size_t i = 0; i < civs_.size(); ++i) {
    if (civs_[i].name == name) return i;
  }
  return std::nullopt;
}

int Universe::distance(std::size_t i, std::size_t j) const {
  if (config_.delay_mode == DelayMode::RealTime) return 0;
  return config_.distances.at(i).at(j);
}

int Universe::discovery_round(std::size_t i, std::size_t j) const {
  return std::max(1, distance(i, j));
}

std::optional<VisibleHistory> Universe::visible_history(std::size_t i, std::size_t j,
                                                        int round) const {
  if (i == j) throw std::invalid_argument("a civilization does not observe itself");
  const int d = distance(i, j);
  if (round < d) return std::nullopt;
  const CivState& other = civs_.at(j);
  VisibleHistory vis;
  if (d == 0) {
    for (const auto& r : other.stick) {
      if (r.round < round) vis.records.push_back(r);
    }
    if (other.alive) {
      vis.current = ObservedState{other.resources, other.worldview};
      vis.last_visible_round = round;
    } else {
      vis.last_visible_round = vis.records.empty() ? 0 : vis.records.back().round;
    }
  } else {
    const int horizon = round - d;
    for (const auto& r : other.stick) {
      if (r.round <= horizon) vis.records.push_back(r);
    }
    vis.last_visible_round = vis.records.empty() ? 0 : vis.records.back().round;
  }
  return vis;
}

Observation Universe::observe(std::size_t i, int round) const {
  const CivState& self = civs_.at(i);
  Observation obs;
  obs.self = self.name;
  obs.round = round;
  obs.worldview = self.worldview;
  obs.resources = self.resources;
  obs.last_matrix = self.matrix;
  obs.self_history = self.stick;
  for (std::size_t j = 0; j < civs_.size(); ++j) {
    if (j == i) continue;
    auto vis = visible_history(i, j, round);
    if (!vis) continue;
    OtherView view;
    view.name = civs_[j].name;
    view.staleness = round - vis->last_visible_round;
    view.discovered_round = discovery_round(i, j);
    view.history = std::move(*vis);
    obs.others.push_back(std::move(view));
  }
  obs.pending_offers = names_of(civs_, self.pending_offers);
  obs.outstanding_offers = names_of(civs_, self.outstanding_offers);
  obs.friendly_signals = names_of(civs_, self.friendly_signals);
  obs.attacked_by = names_of(civs_, self.attacked_by);
  obs.known_aggressors = names_of(civs_, self.known_aggressors);
  obs.pact_partners = names_of(civs_, self.pacts);
  return obs;
}

void Universe::log(std::size_t civ, std::string_view kind, Json payload) {
  round_events_.at(civ).push_back(Event{std::string(kind), std::move(payload)});
}

void Universe::step_round() {
  if (std::none_of(civs_.begin(), civs_.end(), [](const CivState& c) { return c.alive; })) {
    throw std::logic_error("no civilization is alive");
  }
  const int round = round_ + 1;
  const std::size_t n = civs_.size();
  round_events_.assign(n, {});
  pact_candidates_.clear();

  std::vector<bool> alive_at_start(n);
  std::vector<ResourceVector> start_resources(n);
  for (std::size_t i = 0; i < n; ++i) {
    alive_at_start[i] = civs_[i].alive;
    start_resources[i] = civs_[i].resources;
  }

  // (1) arrivals, discovery and understanding
  deliver_signals(round);
  for (std::size_t i = 0; i < n; ++i) {
    if (!civs_[i].alive) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (auto vis = visible_history(i, j, round)) {
        Relation& rel = relations_.at(i, j);
        rel.discovered = true;
        rel.understanding = std::max(rel.understanding, vis->last_visible_round);
      }
    }
  }

  // (2) decisions
  SecretaryOptions options;
  options.max_attempts = config_.max_attempts;
  options.reviewer = reviewer_;
  std::vector<std::optional<Decision>> decisions(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive_at_start[i]) continue;
    Observation obs = observe(i, round);
    const CivSnapshot snapshot = snapshot_of(obs);
    ApprovedDecision approved = validate_with_retries(*agents_[i], std::move(obs), snapshot, options);
    for (std::size_t a = 0; a < approved.rejections.size(); ++a) {
      Json p = Json::object();
      p["attempt"] = static_cast<int>(a + 1);
      p["reason"] = approved.rejections[a].rejection_reason;
      log(i, event::kSecretaryRejected, std::move(p));
    }
    if (approved.defaulted) {
      Json p = Json::object();
      p["attempts"] = approved.attempts;
      log(i, event::kSecretaryDefault, std::move(p));
    }
    if (approved.warning) {
      Json p = Json::object();
      p["detail"] = *approved.warning;
      log(i, event::kRetainedMatrixWarning, std::move(p));
    }
    decisions[i] = std::move(approved.decision);
  }

  // (3) public actions leave; zero-distance signals land immediately
  for (std::size_t i = 0; i < n; ++i) {
    if (decisions[i]) emit_actions(i, *decisions[i], round);
  }
  deliver_signals(round);

  // (4) strikes arriving this round
  resolve_due_wars(round);
  deliver_signals(round);

  // (5) cooperation pacts
  form_pacts(round);

  // (6) growth
  for (std::size_t i = 0; i < n; ++i) {
    if (!decisions[i]) continue;
    CivState& c = civs_[i];
    c.worldview = decisions[i]->worldview;
    c.matrix = decisions[i]->matrix;
    if (c.alive) c.resources = apply_transfer(c.matrix, c.resources);
  }

  // (7) archive
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive_at_start[i]) continue;
    StickRecord r;
    r.round = round;
    r.civ = civs_[i].name;
    r.resources = start_resources[i];
    r.resources_end = civs_[i].resources;
    r.matrix = decisions[i]->matrix;
    r.worldview = decisions[i]->worldview;
    r.public_actions = decisions[i]->public_actions;
    r.private_action = decisions[i]->private_action;
    r.events = std::move(round_events_[i]);
    civs_[i].stick.push_back(std::move(r));
  }
  round_events_.clear();
  round_ = round;
}

void Universe::emit_actions(std::size_t i, const Decision& d, int round) {
  CivState& self = civs_[i];
  for (const auto& action : d.public_actions) {
    auto who = counterpart(action);
    if (!who) continue;
    const std::size_t j = *index_of(*who);
    const int delay = distance(i, j);

    if (is_war(action)) {
      PendingEffect war;
      war.kind = EffectKind::WarArrival;
      war.from = i;
      war.to = j;
      war.emitted_round = round;
      war.deliver_at = round + (config_.war_travel == WarTravel::Instant ? 0 : delay);
      pending_.push_back(war);
      Json p = Json::object();
      p["target"] = civs_[j].name;
      p["arrives"] = war.deliver_at;
      log(i, event::kWarDeclared, std::move(p));
      if (self.pacts.count(j) != 0) break_pact(i, j, "war declared");
      continue;
    }

    PendingEffect signal;
    signal.kind = EffectKind::Signal;
    signal.from = i;
    signal.to = j;
    signal.emitted_round = round;
    signal.deliver_at = round + delay;
    signal.action = action;
    if (std::holds_alternative<RejectCooperation>(action)) {
      self.pending_offers.erase(j);
      if (self.pacts.count(j) != 0) break_pact(i, j, "cooperation rejected");
    } else {
      signal.responds_to_offer = self.pending_offers.erase(j) > 0;
      if (std::holds_alternative<InitiateCooperation>(action) && !signal.responds_to_offer &&
          self.pacts.count(j) == 0) {
        self.outstanding_offers.insert(j);
      }
    }
    pending_.push_back(std::move(signal));
  }
}

void Universe::deliver_signals(int round) {
  std::vector<PendingEffect> due;
  std::vector<PendingEffect> later;
  for (auto& e : pending_) {
    if (e.kind != EffectKind::WarArrival && e.deliver_at <= round) {
      due.push_back(std::move(e));
    } else {
      later.push_back(std::move(e));
    }
  }
  pending_ = std::move(later);
  for (const auto& e : due) deliver(e);
}

void Universe::deliver(const PendingEffect& e) {
  CivState& receiver = civs_[e.to];
  if (!receiver.alive) return;
  Relation& rel = relations_.at(e.to, e.from);

  if (e.kind == EffectKind::Exposure) {
    receiver.known_aggressors.insert(e.aggressor);
    relations_.at(e.to, e.aggressor).appreciation += config_.appreciation.war;
    Json p = Json::object();
    p["aggressor"] = civs_[e.aggressor].name;
    log(e.to, event::kExposure, std::move(p));
    return;
  }

  Json p = Json::object();
  p["from"] = civs_[e.from].name;
  p["action"] = std::string(action_kind(e.action));
  p["sent"] = e.emitted_round;
  log(e.to, event::kSignalReceived, std::move(p));

  if (std::holds_alternative<RejectCooperation>(e.action)) {
    rel.appreciation += config_.appreciation.rejection;
    receiver.outstanding_offers.erase(e.from);
    return;
  }
  rel.appreciation += config_.appreciation.friendly;
  receiver.friendly_signals.insert(e.from);
  const bool answers_our_offer =
      e.responds_to_offer && receiver.outstanding_offers.count(e.from) != 0;
  if (answers_our_offer) {
    pact_candidates_.emplace_back(e.to, e.from);
  } else if (std::holds_alternative<InitiateCooperation>(e.action) &&
             receiver.pacts.count(e.from) == 0) {
    receiver.pending_offers.insert(e.from);
  }
}

void Universe::resolve_due_wars(int round) {
  std::vector<PendingEffect> due;
  std::vector<PendingEffect> later;
  for (auto& e : pending_) {
    if (e.kind == EffectKind::WarArrival && e.deliver_at <= round) {
      due.push_back(std::move(e));
    } else {
      later.push_back(std::move(e));
    }
  }
  pending_ = std::move(later);
  std::stable_sort(due.begin(), due.end(), [](const PendingEffect& a, const PendingEffect& b) {
    return std::tie(a.from, a.emitted_round) < std::tie(b.from, b.emitted_round);
  });
  for (const auto& arrival : due) resolve_war(arrival, round);
}

WarResolution Universe::resolve_war(const PendingEffect& arrival, int round) {
  const std::size_t a = arrival.from;
  const std::size_t d = arrival.to;
  CivState& attacker = civs_[a];
  CivState& defender = civs_[d];
  WarResolution res;

  if (!attacker.alive || !defender.alive) {
    res.void_war = true;
    Json p = Json::object();
    p["attacker"] = attacker.name;
    p["defender"] = defender.name;
    p["declared_round"] = arrival.emitted_round;
    p["reason"] = attacker.alive ? "defender already eliminated" : "attacker already eliminated";
    if (attacker.alive) log(a, event::kWarVoid, p);
    if (defender.alive) log(d, event::kWarVoid, std::move(p));
    return res;
  }

  res.attacker_military_before = attacker.resources.military();
  res.defender_military_before = defender.resources.military();
  res.result = war_outcome(res.attacker_military_before, res.defender_military_before);
  res.after = lanchester_attrition(res.attacker_military_before, res.defender_military_before);

  if (res.result == WarResult::Success) {
    res.loot = war_loot(defender.resources);
    attacker.resources = attacker.resources + res.loot;
    std::array<double, kResourceCount> remainder{};
    for (std::size_t k = 1; k < kResourceCount; ++k) remainder[k] = defender.resources[k] - res.loot[k];
    defender.resources = ResourceVector(remainder);
  }
  attacker.resources =
      attacker.resources.with(ResourceKind::MilitaryCapability, res.after.attacker_after);
  defender.resources =
      defender.resources.with(ResourceKind::MilitaryCapability, res.after.defender_after);

  defender.attacked_by.insert(a);
  defender.known_aggressors.insert(a);
  defender.pending_offers.erase(a);
  defender.outstanding_offers.erase(a);
  relations_.at(d, a).appreciation += config_.appreciation.war;
  if (attacker.pacts.count(d) != 0) break_pact(a, d, "war");

  Json p = Json::object();
  p["attacker"] = attacker.name;
  p["defender"] = defender.name;
  p["declared_round"] = arrival.emitted_round;
  p["result"] = res.result == WarResult::Success ? "success" : "failure";
  p["attacker_military_before"] = res.attacker_military_before;
  p["defender_military_before"] = res.defender_military_before;
  p["attacker_military_after"] = res.after.attacker_after;
  p["defender_military_after"] = res.after.defender_after;
  p["loot"] = resources_json(res.loot);
  log(a, event::kWarResolved, p);
  log(d, event::kWarResolved, std::move(p));

  if (res.result == WarResult::Success) {
    defender.alive = false;
    defender.eliminated_round = round;
    defender.pacts.clear();
    for (auto& other : civs_) other.pacts.erase(d);
    Json e = Json::object();
    e["by"] = attacker.name;
    log(d, event::kEliminated, std::move(e));
  }

  for (std::size_t k = 0; k < civs_.size(); ++k) {
    if (k == a || k == d || !civs_[k].alive) continue;
    PendingEffect exposure;
    exposure.kind = EffectKind::Exposure;
    exposure.from = a;
    exposure.to = k;
    exposure.aggressor = a;
    exposure.emitted_round = round;
    exposure.deliver_at = round + distance(k, a);
    pending_.push_back(exposure);
  }
  return res;
}

void Universe::break_pact(std::size_t a, std::size_t b, std::string_view why) {
  civs_[a].pacts.erase(b);
  civs_[b].pacts.erase(a);
  Json pa = Json::object();
  pa["partner"] = civs_[b].name;
  pa["reason"] = std::string(why);
  log(a, event::kPactBroken, std::move(pa));
  Json pb = Json::object();
  pb["partner"] = civs_[a].name;
  pb["reason"] = std::string(why);
  log(b, event::kPactBroken, std::move(pb));
}

void Universe::form_pacts(int round) {
  for (const auto& [offerer, responder] : pact_candidates_) {
    CivState& x = civs_[offerer];
    CivState& y = civs_[responder];
    if (!x.alive || !y.alive || x.pacts.count(responder) != 0) continue;

    // Each side merges in the best technology figure it has seen of the other.
    auto seen_tech = [&](std::size_t i, std::size_t j) {
      auto vis = visible_history(i, j, round);
      auto res = vis ? vis->latest_resources() : std::nullopt;
      return res ? res->technology() : 0.0;
    };
    const double x_sees = seen_tech(offerer, responder);
    const double y_sees = seen_tech(responder, offerer);
    const double x_before = x.resources.technology();
    const double y_before = y.resources.technology();
    x.resources = x.resources.with(ResourceKind::TechnologyDevelopment, std::max(x_before, x_sees));
    y.resources = y.resources.with(ResourceKind::TechnologyDevelopment, std::max(y_before, y_sees));

    x.pacts.insert(responder);
    y.pacts.insert(offerer);
    x.outstanding_offers.erase(responder);
    y.outstanding_offers.erase(offerer);
    x.pending_offers.erase(responder);
    y.pending_offers.erase(offerer);

    for (auto [self, partner, before] : {std::tuple{offerer, responder, x_before},
                                         std::tuple{responder, offerer, y_before}}) {
      Json p = Json::object();
      p["partner"] = civs_[partner].name;
      log(self, event::kPactFormed, p);
      Json t = Json::object();
      t["partner"] = civs_[partner].name;
      t["technology_before"] = before;
      t["technology_after"] = civs_[self].resources.technology();
      log(self, event::kTechSync, std::move(t));
    }
  }
}

std::vector<StickRecord> Universe::all_records() const {
  std::vector<StickRecord> out;
  for (int r = 1; r <= round_; ++r) {
    for (const auto& c : civs_) {
      for (const auto& rec : c.stick) {
        if (rec.round == r) out.push_back(rec);
      }
    }
  }
  return out;
}

RelationshipMap::RelationshipMap(std::vector<CivName> names)
    : names_(std::move(names)), cells_(names_.size() * names_.size()) {}

Json RelationshipMap::to_json() const {
  Json j = Json::object();
  j["civs"] = names_;
  Json rels = Json::array();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t k = 0; k < names_.size(); ++k) {
      const Relation& r = at(i, k);
      if (i == k || !r.discovered) continue;
      Json e = Json::object();
      e["from"] = names_[i];
      e["to"] = names_[k];
      e["understanding"] = r.understanding;
      e["appreciation"] = r.appreciation;
      rels.push_back(std::move(e));
    }
  }
  j["relations"] = std::move(rels);
  return j;
}

RelationshipMap RelationshipMap::from_json(const Json& j) {
  RelationshipMap map(j.at("civs").get<std::vector<CivName>>());
  auto index = [&](const std::string& name) {
    auto it = std::find(map.names_.begin(), map.names_.end(), name);
    if (it == map.names_.end()) throw std::runtime_error("unknown civilization '" + name + "'");
    return static_cast<std::size_t>(it - map.names_.begin());
  };
  for (const auto& e : j.at("relations")) {
    Relation& r = map.at(index(e.at("from").get<std::string>()), index(e.at("to").get<std::string>()));
    r.discovered = true;
    r.understanding = e.at("understanding").get<int>();
    r.appreciation = e.at("appreciation").get<int>();
  }
  return map;
}

}  // namespace cosmo
