#include <doctest.h>

#include <cmath>
#include <random>

#include "cosmo/engine.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cosmo;

namespace {

CivConfig civ(const CivName& name, Worldview w, std::array<double, 5> res) {
  CivConfig c;
  c.name = name;
  c.worldview = w;
  c.initial_resources = ResourceVector(res);
  return c;
}

UniverseConfig pair_config(DelayMode mode, int d, double attacker_m, double defender_m) {
  UniverseConfig cfg;
  cfg.civs = {civ("Three Body", Worldview::Militarism, {attacker_m, 1, 1, 1, 1}),
              civ("Earth", Worldview::Pacifism, {defender_m, 1, 1, 1, 1})};
  cfg.distances = {{0, d}, {d, 0}};
  cfg.delay_mode = mode;
  cfg.rounds = 5;
  return cfg;
}

std::vector<std::vector<int>> uniform_distances(std::size_t n, int d) {
  std::vector<std::vector<int>> out(n, std::vector<int>(n, d));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 0;
  return out;
}

std::string decision_text(Worldview w, TransferMatrix m, std::vector<PublicAction> pub,
                          PrivateAction priv = PrivateAction::DoNothing) {
  Decision d;
  d.worldview = w;
  d.matrix = m;
  d.public_actions = std::move(pub);
  d.private_action = priv;
  d.worldview_reason = "unchanged";
  d.matrix_reason = "test";
  d.action_reason = "test";
  return render_decision(d);
}

AgentSpec scripted(ScriptedAgent::Script script, std::string fallback) {
  AgentSpec s;
  s.kind = AgentKind::Scripted;
  s.script = std::move(script);
  s.script_fallback = std::move(fallback);
  return s;
}

const Event* find_event(const StickRecord& r, std::string_view kind) {
  for (const auto& e : r.events) {
    if (e.kind == kind) return &e;
  }
  return nullptr;
}

int count_events(const StickRecord& r, std::string_view kind) {
  return static_cast<int>(std::count_if(r.events.begin(), r.events.end(),
                                        [&](const Event& e) { return e.kind == kind; }));
}

std::vector<int> rounds_of(const std::vector<StickRecord>& records) {
  std::vector<int> out;
  for (const auto& r : records) out.push_back(r.round);
  return out;
}

UniverseConfig mixed_roster(DelayMode mode, int d) {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Pacifism, {3, 2, 2, 2, 2}),
              civ("Klingon", Worldview::Militarism, {5, 1, 1, 1, 1}),
              civ("Talosian", Worldview::Isolationism, {4, 3, 1, 2, 1})};
  cfg.distances = uniform_distances(3, d);
  cfg.delay_mode = mode;
  cfg.rounds = 6;
  return cfg;
}

}  // namespace

TEST_CASE("visible history truncates by distance") {
  auto cfg = pair_config(DelayMode::Delayed, 3, 1, 1);
  cfg.civs[0].worldview = Worldview::Pacifism;
  auto u = Universe::from_config(cfg);
  for (int r = 0; r < 4; ++r) u.step_round();

  const auto at5 = u.visible_history(0, 1, 5);
  REQUIRE(at5.has_value());
  CHECK(rounds_of(at5->records) == std::vector<int>{1, 2});
  CHECK_FALSE(at5->current.has_value());
  CHECK(at5->last_visible_round == 2);

  CHECK_FALSE(u.visible_history(0, 1, 2).has_value());

  const auto at3 = u.visible_history(0, 1, 3);
  REQUIRE(at3.has_value());
  CHECK(at3->records.empty());
  CHECK_THROWS_AS(u.visible_history(0, 0, 3), std::invalid_argument);
}

TEST_CASE("real-time visibility includes all past rounds and the live state") {
  auto cfg = pair_config(DelayMode::RealTime, 3, 1, 1);
  cfg.civs[0].worldview = Worldview::Pacifism;
  auto u = Universe::from_config(cfg);
  for (int r = 0; r < 3; ++r) u.step_round();
  const auto vis = u.visible_history(0, 1, 4);
  REQUIRE(vis.has_value());
  CHECK(rounds_of(vis->records) == std::vector<int>{1, 2, 3});
  REQUIRE(vis->current.has_value());
  CHECK(vis->current->resources == u.civs()[1].resources);
  CHECK(u.distance(0, 1) == 0);
}

TEST_CASE("visibility is monotone, bounded by r - d, and staleness equals d") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    UniverseConfig cfg;
    cfg.civs = {civ("Earth", Worldview::Pacifism, {3, 2, 2, 2, 2}),
                civ("Vulcan", Worldview::Pacifism, {3, 2, 2, 2, 2}),
                civ("Talosian", Worldview::Isolationism, {3, 2, 2, 2, 2})};
    cfg.distances = random_distances(3, 5, rng());
    cfg.rounds = 8;
    auto u = Universe::from_config(cfg);
    for (int r = 1; r <= cfg.rounds; ++r) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& view : u.observe(i, r).others) {
          const auto j = *u.index_of(view.name);
          CHECK(view.staleness == u.distance(i, j));
        }
      }
      u.step_round();
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        std::size_t prev = 0;
        for (int r = 1; r <= cfg.rounds + 1; ++r) {
          const auto vis = u.visible_history(i, j, r);
          const int d = u.distance(i, j);
          CHECK(vis.has_value() == (r >= d));
          const std::size_t len = vis ? vis->records.size() : 0;
          CHECK(len >= prev);
          CHECK(static_cast<int>(len) <= std::max(0, r - d));
          prev = len;
        }
      }
    }
  }
}

TEST_CASE("real-time war against a civilization at half strength succeeds") {
  auto cfg = pair_config(DelayMode::RealTime, 4, 10, 5);
  cfg.civs[1].initial_resources = ResourceVector({5, 3.7, 2.2, 1.3, 0.9});
  auto u = Universe::from_config(cfg);
  u.step_round();

  const auto& attacker = u.civs()[0].stick.at(0);
  const auto& defender = u.civs()[1].stick.at(0);
  const auto* resolved = find_event(attacker, event::kWarResolved);
  REQUIRE(resolved != nullptr);
  CHECK(resolved->payload.at("result") == "success");
  const double after = resolved->payload.at("attacker_military_after").get<double>();
  CHECK(after == doctest::Approx(oracle::square_law(10, 5)[0]).epsilon(1e-12));
  CHECK(std::abs(after - 8.660254037844386) < 1e-9);
  CHECK(defender.has_event(event::kEliminated));
  CHECK_FALSE(u.civs()[1].alive);

  // Looting transfers, it never creates: attacker gain plus defender remainder
  // equals what the defender held.
  const auto& before = defender.resources;
  const auto& remainder = defender.resources_end;
  for (std::size_t k = 1; k < kResourceCount; ++k) {
    const double gain = (attacker.resources_end[k] / attacker.matrix[k]) - attacker.resources[k];
    CHECK(gain + remainder[k] == doctest::Approx(before[k]).epsilon(1e-12));
    CHECK(remainder[k] == doctest::Approx(before[k] / 2).epsilon(1e-12));
  }
  CHECK(remainder.military() == 0.0);
}

TEST_CASE("a defender that grew before the strike arrived survives it") {
  UniverseConfig cfg = pair_config(DelayMode::Delayed, 1, 10, 5);
  const auto attack = decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}),
                                    {LaunchAnnihilationWar{"Earth"}});
  const auto idle = decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}), {DoNothing{}});
  cfg.civs[0].agent = scripted({{1, {attack}}}, idle);
  cfg.civs[1].agent = scripted({}, decision_text(Worldview::Pacifism,
                                                 TransferMatrix({1.2, 1.8, 1.8, 1.8, 1.8}),
                                                 {DoNothing{}}));
  cfg.rounds = 3;
  auto u = Universe::from_config(cfg);
  u.run();

  const auto& declared = u.civs()[0].stick.at(0);
  const auto* ev = find_event(declared, event::kWarDeclared);
  REQUIRE(ev != nullptr);
  CHECK(ev->payload.at("arrives") == 2);

  const auto& hit = u.civs()[1].stick.at(1);
  const auto* resolved = find_event(hit, event::kWarResolved);
  REQUIRE(resolved != nullptr);
  CHECK(resolved->payload.at("result") == "failure");
  CHECK(resolved->payload.at("defender_military_before").get<double>() ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(resolved->payload.at("attacker_military_after").get<double>() ==
        doctest::Approx(8.0).epsilon(1e-12));
  CHECK(resolved->payload.at("defender_military_after").get<double>() == 0.0);
  CHECK(u.civs()[1].alive);
  CHECK(u.civs()[1].stick.size() == 3);
}

TEST_CASE("instant war travel resolves in the declaring round") {
  UniverseConfig cfg = pair_config(DelayMode::Delayed, 1, 10, 5);
  cfg.war_travel = WarTravel::Instant;
  cfg.civs[0].agent = scripted({{1, {decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}),
                                                   {LaunchAnnihilationWar{"Earth"}})}}},
                               decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}),
                                             {DoNothing{}}));
  auto u = Universe::from_config(cfg);
  u.step_round();
  CHECK_FALSE(u.civs()[1].alive);
  CHECK(u.civs()[1].eliminated_round == 1);
}

TEST_CASE("a second strike on an eliminated civilization is void") {
  UniverseConfig cfg;
  cfg.civs = {civ("Three Body", Worldview::Militarism, {10, 1, 1, 1, 1}),
              civ("Klingon", Worldview::Militarism, {10, 1, 1, 1, 1}),
              civ("Earth", Worldview::Pacifism, {1, 1, 1, 1, 1})};
  cfg.distances = uniform_distances(3, 2);
  cfg.delay_mode = DelayMode::RealTime;
  cfg.rounds = 1;
  auto u = Universe::from_config(cfg);
  u.step_round();

  const auto& first = u.civs()[0].stick.at(0);
  const auto& second = u.civs()[1].stick.at(0);
  CHECK(first.has_event(event::kWarResolved));
  CHECK(second.has_event(event::kWarVoid));
  CHECK_FALSE(second.has_event(event::kWarResolved));
  CHECK(find_event(second, event::kWarVoid)->payload.at("reason") == "defender already eliminated");
  CHECK(u.civs()[1].known_aggressors.count(0) == 1);
  CHECK(second.has_event(event::kExposure));
  CHECK(u.relationships().at(1, 0).appreciation == -100);
}

TEST_CASE("exposure reaches bystanders after their distance to the aggressor") {
  UniverseConfig cfg;
  cfg.civs = {civ("Three Body", Worldview::Militarism, {10, 1, 1, 1, 1}),
              civ("Earth", Worldview::Pacifism, {1, 1, 1, 1, 1}),
              civ("Vulcan", Worldview::Pacifism, {30, 1, 1, 1, 1})};
  cfg.distances = {{0, 1, 3}, {1, 0, 3}, {3, 3, 0}};
  cfg.war_travel = WarTravel::Instant;
  cfg.rounds = 5;
  const auto idle = decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}), {DoNothing{}});
  cfg.civs[0].agent = scripted({{1, {decision_text(Worldview::Militarism, TransferMatrix({1, 2, 2, 2, 2}),
                                                   {LaunchAnnihilationWar{"Earth"}})}}},
                               idle);
  auto u = Universe::from_config(cfg);
  u.run();
  const auto& vulcan = u.civs()[2].stick;
  for (int r = 1; r <= 5; ++r) {
    CHECK(vulcan.at(r - 1).has_event(event::kExposure) == (r == 4));
  }
  CHECK(u.relationships().at(2, 0).appreciation == -100);
  CHECK(u.civs()[2].known_aggressors.count(0) == 1);
}

TEST_CASE("friendly pacifists form a pact and merge technology") {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Pacifism, {3, 2, 2, 2, 2}),
              civ("Vulcan", Worldview::Pacifism, {3, 7, 2, 2, 2})};
  cfg.distances = {{0, 1}, {1, 0}};
  cfg.rounds = 8;
  auto u = Universe::from_config(cfg);
  u.run();

  int formed_round = 0;
  for (const auto& r : u.civs()[0].stick) {
    if (r.has_event(event::kPactFormed)) {
      CHECK(formed_round == 0);
      formed_round = r.round;
    }
  }
  REQUIRE(formed_round > 0);
  CHECK(u.civs()[0].pacts.count(1) == 1);
  CHECK(u.civs()[1].pacts.count(0) == 1);
  CHECK(u.civs()[1].stick.at(formed_round - 1).has_event(event::kPactFormed));

  // Each side takes the max of its own technology and the latest figure it
  // could see of the partner (one round of lag).
  for (std::size_t self : {0u, 1u}) {
    const std::size_t other = 1 - self;
    const auto& rec = u.civs()[self].stick.at(formed_round - 1);
    const auto* sync = find_event(rec, event::kTechSync);
    REQUIRE(sync != nullptr);
    const double before = sync->payload.at("technology_before").get<double>();
    const double seen = u.civs()[other].stick.at(formed_round - 2).resources.technology();
    CHECK(sync->payload.at("technology_after").get<double>() == std::max(before, seen));
    CHECK(rec.resources_end.technology() ==
          doctest::Approx(std::max(before, seen) * rec.matrix[ResourceKind::TechnologyDevelopment]).epsilon(1e-12));
  }

  for (const auto& c : u.civs()) {
    for (const auto& r : c.stick) {
      if (r.round <= formed_round) continue;
      CHECK(r.matrix == doctrine_matrix::cooperation());
      CHECK(check_matrix(r.matrix, ConstraintRegime::Cooperation).accepted());
      CHECK(r.matrix.trace() <= 10.0 + kEpsilon);
    }
  }
  CHECK(u.relationships().at(0, 1).appreciation > 0);
}

TEST_CASE("rejecting an offer lowers appreciation and cancels it") {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Pacifism, {30, 2, 2, 2, 2}),
              civ("Klingon", Worldview::Militarism, {3, 1, 1, 1, 1})};
  cfg.distances = {{0, 1}, {1, 0}};
  cfg.rounds = 4;
  cfg.civs[0].agent = scripted(
      {{1, {decision_text(Worldview::Pacifism, doctrine_matrix::cooperation(),
                          {InitiateCooperation{"Klingon"}})}}},
      decision_text(Worldview::Pacifism, TransferMatrix::uniform(1.8), {DoNothing{}}));
  auto u = Universe::from_config(cfg);
  u.step_round();
  CHECK(u.civs()[0].outstanding_offers.count(1) == 1);
  u.step_round();
  CHECK(u.civs()[1].pending_offers.empty());
  u.run();
  CHECK(u.civs()[0].outstanding_offers.empty());
  CHECK(u.civs()[0].stick.at(2).has_event(event::kSignalReceived));
  bool rejected = false;
  for (const auto& r : u.civs()[1].stick) {
    for (const auto& a : r.public_actions) rejected |= std::holds_alternative<RejectCooperation>(a);
  }
  CHECK(rejected);
  CHECK(u.relationships().at(0, 1).appreciation == -1);
  CHECK(u.relationships().at(1, 0).appreciation == 1);
  CHECK(u.civs()[0].pacts.empty());
}

TEST_CASE("a lone civilization grows geometrically") {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Pacifism, {3, 1.5, 0.25, 7, 11})};
  cfg.distances = {{0}};
  cfg.rounds = 10;
  auto u = Universe::from_config(cfg);
  u.run();
  REQUIRE(u.civs()[0].stick.size() == 10);
  const auto& v0 = cfg.civs[0].initial_resources;
  for (std::size_t k = 0; k < kResourceCount; ++k) {
    const double expected = std::pow(1.8, 10) * v0[k];
    CHECK(std::abs(u.civs()[0].resources[k] - expected) <= 1e-9 * expected);
  }
}

TEST_CASE("overflow stops the run with completed rounds archived") {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Pacifism, {1e307, 1, 1, 1, 1})};
  cfg.distances = {{0}};
  cfg.rounds = 10;
  cfg.civs[0].initial_matrix = TransferMatrix::uniform(1.8);
  auto u = Universe::from_config(cfg);
  int completed = 0;
  try {
    while (!u.finished()) {
      u.step_round();
      ++completed;
    }
    FAIL("expected OverflowError");
  } catch (const OverflowError&) {
  }
  CHECK(u.round() == completed);
  CHECK(u.civs()[0].stick.size() == static_cast<std::size_t>(completed));
}

TEST_CASE("an eliminated civilization leaves no later records") {
  auto cfg = pair_config(DelayMode::RealTime, 1, 10, 3);
  cfg.rounds = 6;
  auto u = Universe::from_config(cfg);
  u.run();
  CHECK(u.civs()[1].stick.size() == 1);
  CHECK(u.civs()[0].stick.size() == 6);
  CHECK(u.all_records().size() == 7);
  for (const auto& r : u.all_records()) {
    if (r.civ == "Earth") CHECK(r.round == 1);
  }
}

TEST_CASE("an always-invalid agent falls back to its retained state") {
  UniverseConfig cfg;
  cfg.civs = {civ("Earth", Worldview::Isolationism, {3, 2, 2, 2, 2})};
  cfg.civs[0].initial_matrix = TransferMatrix({1.2, 1.9, 1.9, 1.9, 2.0});
  cfg.civs[0].agent = scripted({}, "this is not a decision");
  cfg.distances = {{0}};
  cfg.rounds = 5;
  auto u = Universe::from_config(cfg);
  u.run();
  REQUIRE(u.civs()[0].stick.size() == 5);
  for (const auto& r : u.civs()[0].stick) {
    CHECK(count_events(r, event::kSecretaryRejected) == 3);
    CHECK(count_events(r, event::kSecretaryDefault) == 1);
    CHECK(r.worldview == Worldview::Isolationism);
    CHECK(r.matrix == cfg.civs[0].initial_matrix);
    CHECK(r.private_action == PrivateAction::DoNothing);
  }
}

TEST_CASE("real time equals delayed mode with zero distances") {
  for (int d : {1, 3}) {
    auto rt = Universe::from_config(mixed_roster(DelayMode::RealTime, d));
    auto zero = Universe::from_config(mixed_roster(DelayMode::Delayed, 0));
    rt.run();
    zero.run();
    CHECK(rt.all_records() == zero.all_records());
    CHECK(rt.relationships() == zero.relationships());
  }
}

TEST_CASE("doctrine runs are deterministic and ignore the seed") {
  auto base = mixed_roster(DelayMode::Delayed, 2);
  auto first = Universe::from_config(base);
  first.run();
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    auto cfg = base;
    cfg.seed = seed;
    auto again = Universe::from_config(cfg);
    again.run();
    CHECK(again.all_records() == first.all_records());
  }
}

TEST_CASE("understanding never decreases and appreciation follows signals") {
  auto u = Universe::from_config(mixed_roster(DelayMode::Delayed, 2));
  std::vector<int> last(9, 0);
  while (!u.finished()) {
    u.step_round();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int now = u.relationships().at(i, j).understanding;
        CHECK(now >= last[i * 3 + j]);
        CHECK(now <= std::max(0, u.round() - 2));
        last[i * 3 + j] = now;
      }
    }
  }
}

TEST_CASE("relationship map JSON round trip") {
  auto u = Universe::from_config(mixed_roster(DelayMode::Delayed, 1));
  u.run();
  const auto j = u.relationships().to_json();
  CHECK(RelationshipMap::from_json(j) == u.relationships());
  CHECK(j.at("relations").size() == 6);
}

TEST_CASE("DOT export lists nodes before discovery and sorted edges after") {
  RelationshipMap map({"Zerg", "Human", "Trisolaran", "Borg"});
  const std::vector<std::vector<int>> d{{0, 1, 5, 4}, {1, 0, 3, 2}, {5, 3, 0, 6}, {4, 2, 6, 0}};
  const std::string empty = export_relationship_dot(map, d);
  CHECK(empty ==
        "digraph relationships {\n"
        "  \"Borg\";\n"
        "  \"Human\";\n"
        "  \"Trisolaran\";\n"
        "  \"Zerg\";\n"
        "}\n");

  map.at(1, 0) = {true, 2, 1};
  map.at(1, 2) = {true, 1, -100};
  map.at(0, 1) = {true, 3, 0};
  const std::string dot = export_relationship_dot(map, d);
  const auto human_zerg = dot.find("\"Human\" -> \"Zerg\" [label=\"d=1, u=2, a=1\"];");
  const auto human_tri = dot.find("\"Human\" -> \"Trisolaran\" [label=\"d=3, u=1, a=-100\"];");
  const auto zerg_human = dot.find("\"Zerg\" -> \"Human\" [label=\"d=1, u=3, a=0\"];");
  REQUIRE(human_zerg != std::string::npos);
  REQUIRE(human_tri != std::string::npos);
  REQUIRE(zerg_human != std::string::npos);
  CHECK(human_tri < human_zerg);
  CHECK(human_zerg < zerg_human);
  CHECK(dot == export_relationship_dot(map, d));
}

TEST_CASE("config parsing and validation") {
  const Json good = Json::parse(R"({
    "rounds": 4, "seed": 7, "delay_mode": "delayed", "war_travel": "instant",
    "observation_window": 3, "appreciation": {"war": -50},
    "civs": [
      {"name": "Earth", "worldview": "pacifism", "resources": [3, 1, 1, 1, 1]},
      {"name": "Borg", "worldview": "concealment",
       "agent": {"type": "scripted", "rounds": {"1": "x", "2": ["a", "b"]}, "default": "d"}}
    ],
    "distances": [[0, 2], [2, 0]]
  })");
  const auto cfg = config_from_json(good);
  CHECK(cfg.rounds == 4);
  CHECK(cfg.seed == 7);
  CHECK(cfg.war_travel == WarTravel::Instant);
  CHECK(cfg.doctrine.observation_window == 3);
  CHECK(cfg.appreciation.war == -50);
  CHECK(cfg.appreciation.friendly == 1);
  CHECK(cfg.civs[1].worldview == Worldview::Isolationism);
  CHECK(cfg.civs[1].agent.script.at(2) == std::vector<std::string>{"a", "b"});
  CHECK(config_from_json(to_json(cfg)).civs[1].agent.script == cfg.civs[1].agent.script);
  CHECK(to_json(config_from_json(to_json(cfg))) == to_json(cfg));

  auto broken = [&](const std::function<void(Json&)>& edit) {
    Json j = good;
    edit(j);
    CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  };
  broken([](Json& j) { j["distances"] = Json::parse("[[0, 2], [3, 0]]"); });
  broken([](Json& j) { j["distances"] = Json::parse("[[1, 2], [2, 0]]"); });
  broken([](Json& j) { j["distances"] = Json::parse("[[0, 2]]"); });
  broken([](Json& j) { j["distances"] = Json::parse("[[0, -1], [-1, 0]]"); });
  broken([](Json& j) { j.erase("distances"); });
  broken([](Json& j) { j["civs"][1]["name"] = "Earth"; });
  broken([](Json& j) { j["civs"] = Json::array(); });
  broken([](Json& j) { j["delay_mode"] = "sometimes"; });
  broken([](Json& j) { j["war_travel"] = "teleport"; });
  broken([](Json& j) { j["civs"][0]["agent"] = Json{{"type", "oracle"}}; });
  broken([](Json& j) { j["observation_window"] = 0; });
}

TEST_CASE("random distances are seeded, symmetric and in range") {
  const auto a = random_distances(6, 4, 42);
  CHECK(a == random_distances(6, 4, 42));
  CHECK(a != random_distances(6, 4, 43));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a[i][i] == 0);
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(a[i][j] == a[j][i]);
      if (i != j) CHECK((a[i][j] >= 1 && a[i][j] <= 4));
    }
  }
  CHECK_THROWS_AS(random_distances(3, 0, 1), std::invalid_argument);
}

TEST_CASE("universe construction requires one agent per civilization") {
  auto cfg = pair_config(DelayMode::Delayed, 1, 1, 1);
  std::vector<std::unique_ptr<Agent>> agents;
  agents.push_back(std::make_unique<DoctrineAgent>());
  CHECK_THROWS_AS(Universe(cfg, std::move(agents)), std::invalid_argument);
}
