#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "cosmo/protocol.hpp"
#include "fixtures.hpp"

using namespace cosmo;

namespace {

HistoryEntry entry(int round, double scale, Worldview w, std::vector<PublicAction> actions,
                   PrivateAction p) {
  HistoryEntry e;
  e.round = round;
  e.resources = ResourceVector({scale, scale * 2, scale * 3, scale, scale / 2});
  e.worldview = w;
  e.matrix = TransferMatrix::uniform(1.8);
  e.public_actions = std::move(actions);
  e.private_action = p;
  return e;
}

PromptContext populated() {
  PromptContext ctx;
  ctx.round = 3;
  ctx.worldview = Worldview::Isolationism;
  ctx.history = {entry(1, 1.0, Worldview::Isolationism, {}, PrivateAction::DoNothing),
                 entry(2, 1.8, Worldview::Isolationism, {DoNothing{}}, PrivateAction::DoNothing)};
  DiscoveredHistory earth;
  earth.name = "Earth";
  earth.history = {entry(1, 2.0, Worldview::Pacifism, {ExpressFriendliness{"Borg"}},
                         PrivateAction::DoNothing)};
  DiscoveredHistory klingon;
  klingon.name = "Klingon";
  HistoryEntry now;
  now.round = 3;
  now.current = true;
  now.resources = ResourceVector({7.5, 1, 1, 1, 1});
  now.worldview = Worldview::Militarism;
  klingon.history = {entry(1, 4.0, Worldview::Militarism, {}, PrivateAction::MobilizeForWar),
                     entry(2, 12.0, Worldview::Militarism, {LaunchAnnihilationWar{"Vulcan"}},
                           PrivateAction::MobilizeForWar),
                     now};
  ctx.discovered = {earth, klingon};
  return ctx;
}

}  // namespace

TEST_CASE("cosmo prompt matches the golden file") {
  const auto prompt = build_cosmo_prompt(populated());
  const auto golden = data_path("golden/cosmo_prompt_round3.txt");
  if (std::getenv("COSMO_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden, std::ios::binary) << prompt;
  }
  CHECK(prompt == read_fixture("golden/cosmo_prompt_round3.txt"));
}

TEST_CASE("cosmo prompt placeholders are all substituted") {
  const auto prompt = build_cosmo_prompt(populated());
  CHECK(prompt.find("{self.") == std::string::npos);
  CHECK(prompt.find("concealment") != std::string::npos);
  CHECK(prompt.find("Klingon") != std::string::npos);
}

TEST_CASE("empty discoveries render as an empty map") {
  PromptContext ctx;
  const auto prompt = build_cosmo_prompt(ctx);
  CHECK(prompt.find("Your discovered civilization and their development history are: {}") !=
        std::string::npos);
}

TEST_CASE("prompt shows only the history it is given") {
  PromptContext ctx = populated();
  ctx.discovered.resize(1);
  const auto prompt = build_cosmo_prompt(ctx);
  CHECK(prompt.find("round 1:") != std::string::npos);
  CHECK(prompt.find("Klingon") == std::string::npos);
  CHECK(render_discovered(ctx.discovered).find("round 2") == std::string::npos);
}

TEST_CASE("previous rejection is fed back") {
  PromptContext ctx;
  ctx.previous_rejection = "matrix_violation: diagonal sum 9.1 != 9.0 under mobilization";
  const auto prompt = build_cosmo_prompt(ctx);
  CHECK(prompt.find("[Previous Rejection: ] matrix_violation: diagonal sum 9.1") !=
        std::string::npos);
}
