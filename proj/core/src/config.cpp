#include <fstream>
#include <random>
#include <stdexcept>

#include "cosmo/engine.hpp"

namespace cosmo {
namespace {

AgentSpec agent_from_json(const Json& j, const std::filesystem::path& base_dir) {
  AgentSpec spec;
  const auto type = j.value("type", std::string("doctrine"));
  if (type == "doctrine") {
    spec.kind = AgentKind::Doctrine;
  } else if (type == "llm") {
    spec.kind = AgentKind::Llm;
    EndpointConfig& e = spec.endpoint;
    e.base_url = j.value("base_url", e.base_url);
    e.path = j.value("path", e.path);
    e.model = j.value("model", e.model);
    e.api_key_env = j.value("api_key_env", e.api_key_env);
    e.timeout_s = j.value("timeout_s", e.timeout_s);
    e.max_retries = j.value("max_retries", e.max_retries);
    e.backoff_ms = j.value("backoff_ms", e.backoff_ms);
    e.temperature = j.value("temperature", e.temperature);
  } else if (type == "replay") {
    spec.kind = AgentKind::Replay;
    std::filesystem::path p = j.at("transcript").get<std::string>();
    spec.transcript = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  } else if (type == "scripted") {
    spec.kind = AgentKind::Scripted;
    if (j.contains("rounds")) {
      for (const auto& [key, value] : j.at("rounds").items()) {
        auto& texts = spec.script[std::stoi(key)];
        if (value.is_string()) {
          texts.push_back(value.get<std::string>());
        } else {
          for (const auto& v : value) texts.push_back(v.get<std::string>());
        }
      }
    }
    if (j.contains("default")) spec.script_fallback = j.at("default").get<std::string>();
  } else {
    throw std::invalid_argument("unknown agent type '" + type + "'");
  }
  return spec;
}

Json agent_to_json(const AgentSpec& spec) {
  Json j = Json::object();
  switch (spec.kind) {
    case AgentKind::Doctrine: j["type"] = "doctrine"; break;
    case AgentKind::Llm:
      j["type"] = "llm";
      j["base_url"] = spec.endpoint.base_url;
      j["path"] = spec.endpoint.path;
      j["model"] = spec.endpoint.model;
      j["api_key_env"] = spec.endpoint.api_key_env;
      j["timeout_s"] = spec.endpoint.timeout_s;
      j["max_retries"] = spec.endpoint.max_retries;
      j["backoff_ms"] = spec.endpoint.backoff_ms;
      j["temperature"] = spec.endpoint.temperature;
      break;
    case AgentKind::Replay:
      j["type"] = "replay";
      j["transcript"] = spec.transcript ? spec.transcript->string() : "";
      break;
    case AgentKind::Scripted: {
      j["type"] = "scripted";
      Json rounds = Json::object();
      for (const auto& [round, texts] : spec.script) rounds[std::to_string(round)] = texts;
      j["rounds"] = std::move(rounds);
      if (spec.script_fallback) j["default"] = *spec.script_fallback;
      break;
    }
  }
  return j;
}

}  // namespace

std::string_view to_string(DelayMode m) { return m == DelayMode::RealTime ? "realtime" : "delayed"; }
std::string_view to_string(WarTravel w) { return w == WarTravel::Instant ? "instant" : "delayed"; }

void UniverseConfig::validate() const {
  if (civs.empty()) throw std::invalid_argument("config needs at least one civilization");
  if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
  if (doctrine.observation_window < 1) {
    throw std::invalid_argument("observation_window must be >= 1");
  }
  std::set<CivName> names;
  for (const auto& c : civs) {
    if (c.name.empty()) throw std::invalid_argument("civilization names must be non-empty");
    if (!names.insert(c.name).second) {
      throw std::invalid_argument("duplicate civilization name '" + c.name + "'");
    }
  }
  const std::size_t n = civs.size();
  if (distances.size() != n) throw std::invalid_argument("distances must be an n x n matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) throw std::invalid_argument("distances must be an n x n matrix");
    if (distances[i][i] != 0) throw std::invalid_argument("distances must have a zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (distances[i][j] < 0) throw std::invalid_argument("distances must be non-negative");
      if (distances[i][j] != distances[j][i]) {
        throw std::invalid_argument("distances must be symmetric");
      }
    }
  }
}

std::vector<std::vector<int>> random_distances(std::size_t count, int max_distance,
                                               std::uint64_t seed) {
  if (max_distance < 1) throw std::invalid_argument("max distance must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> d(count, std::vector<int>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const int value = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_distance));
      d[i][j] = d[j][i] = value;
    }
  }
  return d;
}

UniverseConfig config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  UniverseConfig cfg;
  cfg.rounds = j.value("rounds", cfg.rounds);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.max_attempts = j.value("max_attempts", cfg.max_attempts);
  cfg.doctrine.observation_window = j.value("observation_window", cfg.doctrine.observation_window);

  const auto mode = j.value("delay_mode", std::string("delayed"));
  if (mode == "realtime") {
    cfg.delay_mode = DelayMode::RealTime;
  } else if (mode == "delayed") {
    cfg.delay_mode = DelayMode::Delayed;
  } else {
    throw std::invalid_argument("delay_mode must be 'realtime' or 'delayed'");
  }
  const auto travel = j.value("war_travel", std::string("delayed"));
  if (travel == "instant") {
    cfg.war_travel = WarTravel::Instant;
  } else if (travel == "delayed") {
    cfg.war_travel = WarTravel::Delayed;
  } else {
    throw std::invalid_argument("war_travel must be 'delayed' or 'instant'");
  }
  if (j.contains("appreciation")) {
    const auto& a = j.at("appreciation");
    cfg.appreciation.friendly = a.value("friendly", cfg.appreciation.friendly);
    cfg.appreciation.rejection = a.value("rejection", cfg.appreciation.rejection);
    cfg.appreciation.war = a.value("war", cfg.appreciation.war);
  }

  for (const auto& c : j.at("civs")) {
    CivConfig civ;
    civ.name = c.at("name").get<std::string>();
    civ.worldview = worldview_from_json(c.at("worldview"));
    if (c.contains("resources")) civ.initial_resources = resources_from_json(c.at("resources"));
    if (c.contains("matrix")) civ.initial_matrix = matrix_from_json(c.at("matrix"));
    if (c.contains("agent")) civ.agent = agent_from_json(c.at("agent"), base_dir);
    cfg.civs.push_back(std::move(civ));
  }

  if (j.contains("distances")) {
    cfg.distances = j.at("distances").get<std::vector<std::vector<int>>>();
  } else if (j.contains("random_distances")) {
    cfg.distances = random_distances(cfg.civs.size(),
                                     j.at("random_distances").value("max", 4), cfg.seed);
  } else if (cfg.civs.size() == 1) {
    cfg.distances = {{0}};
  } else {
    throw std::invalid_argument("config needs 'distances' or 'random_distances'");
  }
  cfg.validate();
  return cfg;
}

UniverseConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(j, path.parent_path());
}

Json to_json(const UniverseConfig& config) {
  Json j = Json::object();
  j["rounds"] = config.rounds;
  j["seed"] = config.seed;
  j["delay_mode"] = std::string(to_string(config.delay_mode));
  j["war_travel"] = std::string(to_string(config.war_travel));
  j["max_attempts"] = config.max_attempts;
  j["observation_window"] = config.doctrine.observation_window;
  Json a = Json::object();
  a["friendly"] = config.appreciation.friendly;
  a["rejection"] = config.appreciation.rejection;
  a["war"] = config.appreciation.war;
  j["appreciation"] = std::move(a);
  Json civs = Json::array();
  for (const auto& c : config.civs) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["worldview"] = std::string(to_string(c.worldview));
    cj["resources"] = to_json(c.initial_resources);
    Json diag = Json::array();
    for (double v : c.initial_matrix.diag()) diag.push_back(v);
    cj["matrix"] = std::move(diag);
    cj["agent"] = agent_to_json(c.agent);
    civs.push_back(std::move(cj));
  }
  j["civs"] = std::move(civs);
  j["distances"] = config.distances;
  return j;
}

}  // namespace cosmo
