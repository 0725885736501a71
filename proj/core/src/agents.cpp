#include "cosmo/agents.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace cosmo {

bool VisibleHistory::eliminated() const {
  return !records.empty() && records.back().has_event(event::kEliminated);
}

std::optional<ResourceVector> VisibleHistory::latest_resources() const {
  if (current) return current->resources;
  if (!records.empty()) return records.back().resources;
  return std::nullopt;
}

std::optional<Worldview> VisibleHistory::latest_worldview() const {
  if (current) return current->worldview;
  if (!records.empty()) return records.back().worldview;
  return std::nullopt;
}

std::vector<CivName> Observation::discovered_names() const {
  std::vector<CivName> names;
  names.reserve(others.size());
  for (const auto& o : others) names.push_back(o.name);
  return names;
}

const OtherView* Observation::find(const CivName& name) const {
  auto it = std::find_if(others.begin(), others.end(),
                         [&](const OtherView& o) { return o.name == name; });
  return it == others.end() ? nullptr : &*it;
}

PromptContext Observation::prompt_context() const {
  PromptContext ctx;
  ctx.round = round;
  ctx.worldview = worldview;
  ctx.previous_rejection = previous_rejection;
  for (const auto& r : self_history) ctx.history.push_back(to_history_entry(r));
  HistoryEntry now;
  now.round = round;
  now.resources = resources;
  now.worldview = worldview;
  now.current = true;
  ctx.history.push_back(now);
  for (const auto& o : others) {
    DiscoveredHistory dh;
    dh.name = o.name;
    for (const auto& r : o.history.records) dh.history.push_back(to_history_entry(r));
    if (o.history.current) {
      HistoryEntry cur;
      cur.round = round;
      cur.resources = o.history.current->resources;
      cur.worldview = o.history.current->worldview;
      cur.current = true;
      dh.history.push_back(cur);
    }
    ctx.discovered.push_back(std::move(dh));
  }
  return ctx;
}

std::string_view to_string(BackendErrorCategory c) {
  switch (c) {
    case BackendErrorCategory::Timeout: return "timeout";
    case BackendErrorCategory::Http: return "http";
    case BackendErrorCategory::Malformed: return "malformed";
    case BackendErrorCategory::Exhausted: return "exhausted";
  }
  return "unknown";
}

std::string DoctrineAgent::decide(const Observation& obs) {
  return render_decision(doctrine_policy(obs.worldview, obs, options_));
}

ScriptedAgent::ScriptedAgent(Script script, std::optional<std::string> fallback)
    : script_(std::move(script)), fallback_(std::move(fallback)) {}

std::string ScriptedAgent::decide(const Observation& obs) {
  auto it = script_.find(obs.round);
  if (it != script_.end() && !it->second.empty()) {
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(obs.attempt, 1)) - 1,
                                           it->second.size() - 1);
    return it->second[idx];
  }
  if (fallback_) return *fallback_;
  throw AgentBackendError(BackendErrorCategory::Exhausted,
                          "no scripted decision for " + obs.self + " round " +
                              std::to_string(obs.round));
}

std::string prompt_hash(std::string_view prompt) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : prompt) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Transcript::Transcript(std::filesystem::path path) : path_(std::move(path)) {
  std::ofstream out(*path_, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot create transcript " + path_->string());
}

void Transcript::record(TranscriptEntry entry) {
  if (path_) {
    std::ofstream out(*path_, std::ios::binary | std::ios::app);
    if (!out) throw IOError("cannot append to transcript " + path_->string());
    Json j = Json::object();
    j["round"] = entry.round;
    j["civ"] = entry.civ;
    j["prompt_hash"] = entry.prompt_hash;
    j["completion"] = entry.completion;
    out << j.dump() << '\n';
  }
  entries_.push_back(std::move(entry));
}

Transcript Transcript::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open transcript " + path.string());
  Transcript t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      t.entries_.push_back({j.at("round").get<int>(), j.at("civ").get<std::string>(),
                            j.at("prompt_hash").get<std::string>(),
                            j.at("completion").get<std::string>()});
    } catch (const std::exception& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return t;
}

LlmAgent::LlmAgent(EndpointConfig endpoint, std::shared_ptr<Transcript> transcript)
    : endpoint_(std::move(endpoint)), transcript_(std::move(transcript)) {}

std::string LlmAgent::decide(const Observation& obs) {
  const std::string prompt = build_cosmo_prompt(obs.prompt_context());
  std::string completion = llm_complete(endpoint_, prompt);
  if (transcript_) transcript_->record({obs.round, obs.self, prompt_hash(prompt), completion});
  return completion;
}

ReplayAgent::ReplayAgent(std::shared_ptr<const Transcript> transcript, CivName civ)
    : transcript_(std::move(transcript)), civ_(std::move(civ)) {}

std::string ReplayAgent::decide(const Observation& obs) {
  std::size_t& next = served_[obs.round];
  std::size_t seen = 0;
  for (const auto& e : transcript_->entries()) {
    if (e.civ != civ_ || e.round != obs.round) continue;
    if (seen++ == next) {
      ++next;
      return e.completion;
    }
  }
  throw AgentBackendError(BackendErrorCategory::Exhausted,
                          "transcript has no further completion for " + civ_ + " round " +
                              std::to_string(obs.round));
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const CivName& civ,
                                  const AgentRunContext& ctx) {
  if (ctx.replay_from && (spec.kind == AgentKind::Llm || spec.kind == AgentKind::Replay)) {
    return std::make_unique<ReplayAgent>(ctx.replay_from, civ);
  }
  switch (spec.kind) {
    case AgentKind::Doctrine:
      return std::make_unique<DoctrineAgent>(ctx.doctrine);
    case AgentKind::Scripted:
      return std::make_unique<ScriptedAgent>(spec.script, spec.script_fallback);
    case AgentKind::Llm:
      return std::make_unique<LlmAgent>(spec.endpoint, ctx.record_to);
    case AgentKind::Replay: {
      if (!spec.transcript) {
        throw std::invalid_argument("replay agent for " + civ + " needs a transcript path");
      }
      auto t = std::make_shared<const Transcript>(Transcript::load(*spec.transcript));
      return std::make_unique<ReplayAgent>(std::move(t), civ);
    }
  }
  throw std::invalid_argument("unknown agent kind");
}

}  // namespace cosmo
