#include "cosmo/stick.hpp"

#include <algorithm>
#include <fstream>

namespace cosmo {

bool StickRecord::has_event(std::string_view kind) const {
  return std::any_of(events.begin(), events.end(),
                     [&](const Event& e) { return e.kind == kind; });
}

Json to_json(const ResourceVector& r) {
  Json out = Json::array();
  for (double v : r.values()) out.push_back(v);
  return out;
}

Json to_json(const PublicAction& a) {
  Json out = Json::object();
  out["type"] = std::string(action_kind(a));
  if (auto who = counterpart(a)) {
    out[std::holds_alternative<RejectCooperation>(a) ? "source" : "target"] = *who;
  }
  return out;
}

Json to_json(const StickRecord& r) {
  Json out = Json::object();
  out["round"] = r.round;
  out["civ"] = r.civ;
  out["resources"] = to_json(r.resources);
  out["resources_end"] = to_json(r.resources_end);
  Json diag = Json::array();
  for (double v : r.matrix.diag()) diag.push_back(v);
  out["matrix_diag"] = std::move(diag);
  out["worldview"] = std::string(to_string(r.worldview));
  Json actions = Json::array();
  for (const auto& a : r.public_actions) actions.push_back(to_json(a));
  out["public_actions"] = std::move(actions);
  out["private_action"] = std::string(to_string(r.private_action));
  Json events = Json::array();
  for (const auto& e : r.events) {
    Json ev = Json::object();
    ev["kind"] = e.kind;
    ev["payload"] = e.payload;
    events.push_back(std::move(ev));
  }
  out["events"] = std::move(events);
  return out;
}

namespace {

std::array<double, kResourceCount> five_reals(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != kResourceCount) {
    throw std::runtime_error(std::string(what) + " must be an array of 5 numbers");
  }
  std::array<double, kResourceCount> out{};
  for (std::size_t k = 0; k < kResourceCount; ++k) {
    if (!j[k].is_number()) throw std::runtime_error(std::string(what) + " entries must be numbers");
    out[k] = j[k].get<double>();
  }
  return out;
}

}  // namespace

ResourceVector resources_from_json(const Json& j) {
  return ResourceVector(five_reals(j, "resources"));
}

TransferMatrix matrix_from_json(const Json& j) { return TransferMatrix(five_reals(j, "matrix")); }

Worldview worldview_from_json(const Json& j) {
  auto w = parse_worldview(j.get<std::string>());
  if (!w) throw std::runtime_error("unknown worldview '" + j.get<std::string>() + "'");
  return *w;
}

PublicAction public_action_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "do_nothing") return DoNothing{};
  if (type == "reject_cooperation") return RejectCooperation{j.at("source").get<std::string>()};
  const auto target = j.at("target").get<std::string>();
  if (type == "express_friendliness") return ExpressFriendliness{target};
  if (type == "initiate_cooperation") return InitiateCooperation{target};
  if (type == "launch_annihilation_war") return LaunchAnnihilationWar{target};
  throw std::runtime_error("unknown public action type '" + type + "'");
}

PrivateAction private_action_from_json(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "mobilize_for_war") return PrivateAction::MobilizeForWar;
  if (s == "do_nothing") return PrivateAction::DoNothing;
  throw std::runtime_error("unknown private action '" + s + "'");
}

StickRecord stick_record_from_json(const Json& j) {
  StickRecord r;
  r.round = j.at("round").get<int>();
  r.civ = j.at("civ").get<std::string>();
  r.resources = resources_from_json(j.at("resources"));
  r.resources_end = resources_from_json(j.at("resources_end"));
  r.matrix = matrix_from_json(j.at("matrix_diag"));
  r.worldview = worldview_from_json(j.at("worldview"));
  for (const auto& a : j.at("public_actions")) r.public_actions.push_back(public_action_from_json(a));
  r.private_action = private_action_from_json(j.at("private_action"));
  for (const auto& e : j.at("events")) {
    r.events.push_back(Event{e.at("kind").get<std::string>(), e.at("payload")});
  }
  return r;
}

void write_stick(const std::filesystem::path& path, const std::vector<StickRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot open " + path.string() + " for writing");
  for (const auto& r : records) out << to_json(r).dump() << '\n';
  if (!out) throw IOError("write failed for " + path.string());
}

std::vector<StickRecord> read_stick(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path.string());
  std::vector<StickRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(stick_record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return records;
}

HistoryEntry to_history_entry(const StickRecord& r) {
  HistoryEntry e;
  e.round = r.round;
  e.resources = r.resources;
  e.worldview = r.worldview;
  e.matrix = r.matrix;
  e.public_actions = r.public_actions;
  e.private_action = r.private_action;
  return e;
}

}  // namespace cosmo
