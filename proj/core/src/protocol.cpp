#include "cosmo/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <regex>
#include <set>

namespace cosmo {
namespace {

constexpr std::string_view kKnownFields[] = {
    field::kPoliticalSystem, field::kPoliticalSystemReason, field::kTransferMatrix,
    field::kTransferMatrixReason, field::kPublicAction, field::kPrivateAction,
    field::kActionReason, field::kOtherInformation, field::kDiscoveredCivilization,
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// Lowercase, underscores as spaces, whitespace runs collapsed, trimmed.
std::string normalize(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : trim(s)) {
    if (c == '_') c = ' ';
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

struct Header {
  std::string_view name;  // canonical field name
  std::size_t begin;      // position of '['
  std::size_t value_begin;
};

/// Finds every `[Known Field: ]` header in order of appearance.
std::vector<Header> scan_headers(std::string_view text) {
  std::vector<Header> headers;
  std::size_t i = 0;
  while ((i = text.find('[', i)) != std::string_view::npos) {
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != ':' && text[j] != ']' && text[j] != '[' &&
           text[j] != '\n') {
      ++j;
    }
    if (j >= text.size() || text[j] != ':') {
      ++i;
      continue;
    }
    std::size_t k = j + 1;
    while (k < text.size() && (text[k] == ' ' || text[k] == '\t')) ++k;
    if (k >= text.size() || text[k] != ']') {
      ++i;
      continue;
    }
    const std::string name = normalize(text.substr(i + 1, j - i - 1));
    const auto* match = std::find_if(std::begin(kKnownFields), std::end(kKnownFields),
                                     [&](std::string_view f) { return normalize(f) == name; });
    if (match == std::end(kKnownFields)) {
      ++i;
      continue;
    }
    headers.push_back({*match, i, k + 1});
    i = k + 1;
  }
  return headers;
}

using FieldMap = std::map<std::string_view, std::string_view>;

/// First occurrence of each field wins; a value runs to the next known header.
FieldMap split_fields(std::string_view text) {
  FieldMap fields;
  const auto headers = scan_headers(text);
  for (std::size_t h = 0; h < headers.size(); ++h) {
    const std::size_t end = h + 1 < headers.size() ? headers[h + 1].begin : text.size();
    const auto value = trim(text.substr(headers[h].value_begin, end - headers[h].value_begin));
    fields.emplace(headers[h].name, value);
  }
  return fields;
}

ParseError make_error(ParseErrorKind kind, std::string_view field, std::string detail,
                      std::string_view span) {
  return ParseError{kind, std::string(field), std::move(detail), std::string(span)};
}

const std::regex& number_pattern() {
  static const std::regex re(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return re;
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  const std::string s(token);
  if (!std::regex_match(s, number_pattern())) return std::nullopt;
  double value = 0.0;
  const char* first = s.data() + (s.front() == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, std::string_view delims) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || delims.find(s[i]) != std::string_view::npos) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string_view strip_chars(std::string_view s, std::string_view chars) {
  s = trim(s);
  while (!s.empty() && chars.find(s.front()) != std::string_view::npos) s = trim(s.substr(1));
  while (!s.empty() && chars.find(s.back()) != std::string_view::npos) {
    s = trim(s.substr(0, s.size() - 1));
  }
  return s;
}

std::optional<CivName> match_civ(std::string_view name, const std::vector<CivName>& known) {
  const std::string n = normalize(name);
  for (const auto& k : known) {
    if (normalize(k) == n) return k;
  }
  return std::nullopt;
}

enum class Verb { Express, Initiate, War, Reject };

struct VerbPattern {
  Verb verb;
  std::string_view prefix;  // normalized form
};

// Longer prefixes first so "towards civilization" wins over "towards".
constexpr VerbPattern kVerbPatterns[] = {
    {Verb::Express, "express friendliness towards civilization "},
    {Verb::Express, "express friendliness toward civilization "},
    {Verb::Express, "express friendliness towards "},
    {Verb::Express, "express friendliness to "},
    {Verb::Initiate, "initiate cooperation towards civilization "},
    {Verb::Initiate, "initiate cooperation toward civilization "},
    {Verb::Initiate, "initiate cooperation with civilization "},
    {Verb::Initiate, "initiate cooperation towards "},
    {Verb::Initiate, "initiate cooperation with "},
    {Verb::War, "launch annihilation war towards civilization "},
    {Verb::War, "launch annihilation war toward civilization "},
    {Verb::War, "launch annihilation war against civilization "},
    {Verb::War, "launch annihilation war towards "},
    {Verb::War, "launch annihilation war against "},
    {Verb::Reject, "reject cooperation from civilization "},
    {Verb::Reject, "reject cooperation from "},
};

PublicAction make_action(Verb verb, CivName name) {
  switch (verb) {
    case Verb::Express: return ExpressFriendliness{std::move(name)};
    case Verb::Initiate: return InitiateCooperation{std::move(name)};
    case Verb::War: return LaunchAnnihilationWar{std::move(name)};
    case Verb::Reject: return RejectCooperation{std::move(name)};
  }
  return DoNothing{};
}

bool is_do_nothing(std::string_view normalized) {
  return normalized == "do nothing" || normalized == "none" || normalized == "no action" ||
         normalized == "n/a";
}

ParseResult<std::vector<PublicAction>> parse_public_actions(
    std::string_view text, const std::vector<CivName>& known) {
  std::vector<PublicAction> parsed;
  for (std::string_view segment : split(text, "\n/")) {
    const std::string_view cleaned = strip_chars(segment, "-*.;");
    if (cleaned.empty()) continue;
    const std::string norm = normalize(cleaned);
    if (is_do_nothing(norm)) {
      parsed.emplace_back(DoNothing{});
      continue;
    }
    const VerbPattern* found = nullptr;
    for (const auto& p : kVerbPatterns) {
      if (norm.rfind(p.prefix, 0) == 0) {
        found = &p;
        break;
      }
    }
    if (found == nullptr) {
      return make_error(ParseErrorKind::UnknownAction, field::kPublicAction,
                        "unrecognized public action", cleaned);
    }
    // Recover the original-case tail: count the normalized words consumed.
    std::size_t words = std::count(found->prefix.begin(), found->prefix.end(), ' ');
    std::size_t pos = 0;
    while (words > 0 && pos < cleaned.size()) {
      while (pos < cleaned.size() && !is_space(cleaned[pos]) && cleaned[pos] != '_') ++pos;
      while (pos < cleaned.size() && (is_space(cleaned[pos]) || cleaned[pos] == '_')) ++pos;
      --words;
    }
    const std::string_view names = cleaned.substr(pos);
    bool any = false;
    for (std::string_view raw_name : split(names, "|,")) {
      const std::string_view name = strip_chars(raw_name, "[]\"'.");
      if (name.empty()) continue;
      auto civ = match_civ(name, known);
      if (!civ) {
        return make_error(ParseErrorKind::UnknownCivilization, field::kPublicAction,
                          "target is not a discovered civilization", name);
      }
      parsed.push_back(make_action(found->verb, *civ));
      any = true;
    }
    if (!any) {
      return make_error(ParseErrorKind::UnknownAction, field::kPublicAction,
                        "public action names no civilization", cleaned);
    }
  }

  // One action per counterpart, at most one war, DoNothing only when alone.
  std::vector<PublicAction> out;
  std::set<CivName> seen;
  bool war_taken = false;
  bool saw_do_nothing = false;
  for (auto& action : parsed) {
    auto who = counterpart(action);
    if (!who) {
      saw_do_nothing = true;
      continue;
    }
    if (seen.count(*who) != 0) continue;
    if (is_war(action)) {
      if (war_taken) continue;
      war_taken = true;
    }
    seen.insert(*who);
    out.push_back(std::move(action));
  }
  if (out.empty() && saw_do_nothing) out.emplace_back(DoNothing{});
  return out;
}

ParseResult<PrivateAction> parse_private_action(std::string_view text) {
  const std::string norm = normalize(strip_chars(text, "-*.;"));
  if (norm.empty() || is_do_nothing(norm)) return PrivateAction::DoNothing;
  if (norm == "war mobilization" || norm == "mobilize for war" || norm == "mobilization" ||
      norm == "war mobilisation") {
    return PrivateAction::MobilizeForWar;
  }
  return make_error(ParseErrorKind::UnknownAction, field::kPrivateAction,
                    "unrecognized private action", text);
}

std::vector<CivName> parse_discovered(std::string_view text, const std::vector<CivName>& known) {
  const std::string hay = lower(text);
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  std::vector<std::pair<std::size_t, CivName>> hits;
  for (const auto& name : known) {
    const std::string needle = lower(name);
    if (needle.empty()) continue;
    std::size_t pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
      const bool left_ok = pos == 0 || !is_word(hay[pos - 1]);
      const std::size_t end = pos + needle.size();
      const bool right_ok = end >= hay.size() || !is_word(hay[end]);
      if (left_ok && right_ok) {
        hits.emplace_back(pos, name);
        break;
      }
      ++pos;
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<CivName> out;
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

std::string_view field_or_empty(const FieldMap& fields, std::string_view name) {
  auto it = fields.find(name);
  return it == fields.end() ? std::string_view{} : it->second;
}

ParseResult<ActionFields> parse_actions(const FieldMap& fields,
                                        const std::vector<CivName>& known,
                                        bool require_public) {
  ActionFields actions;
  auto pub_it = fields.find(field::kPublicAction);
  if (pub_it != fields.end()) {
    auto pub = parse_public_actions(pub_it->second, known);
    if (!pub) return pub.error();
    actions.public_actions = std::move(pub.value());
  }
  if (require_public && !known.empty() && actions.public_actions.empty()) {
    return make_error(ParseErrorKind::MissingField, field::kPublicAction,
                      "a public action is required once a civilization is discovered",
                      pub_it == fields.end() ? std::string_view{} : pub_it->second);
  }
  auto priv_it = fields.find(field::kPrivateAction);
  if (priv_it != fields.end()) {
    auto priv = parse_private_action(priv_it->second);
    if (!priv) return priv.error();
    actions.private_action = priv.value();
  }
  return actions;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MissingField: return "missing_field";
    case ParseErrorKind::MatrixShape: return "matrix_shape";
    case ParseErrorKind::UnknownWorldview: return "unknown_worldview";
    case ParseErrorKind::UnknownAction: return "unknown_action";
    case ParseErrorKind::UnknownCivilization: return "unknown_civilization";
  }
  return "unknown";
}

std::string ParseError::message() const {
  std::string msg = "[" + field + "] " + detail;
  if (!span.empty()) msg += ": '" + span + "'";
  return msg;
}

ParseResult<TransferMatrix> parse_matrix_text(std::string_view text) {
  auto shape_error = [&](std::string detail, std::string_view span) {
    return make_error(ParseErrorKind::MatrixShape, field::kTransferMatrix, std::move(detail),
                      span);
  };
  std::string_view body = strip_chars(text, "[]");
  std::vector<std::string_view> rows = split(body, ";");
  while (!rows.empty() && trim(rows.back()).empty()) rows.pop_back();
  if (rows.size() != kResourceCount) {
    return shape_error("expected 5 rows separated by ';', found " + std::to_string(rows.size()),
                       text);
  }
  std::array<double, kResourceCount> diag{};
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    std::vector<std::string_view> cells = split(strip_chars(rows[r], "[]"), ",");
    if (cells.size() != kResourceCount) {
      return shape_error("row " + std::to_string(r + 1) + " must have 5 entries, found " +
                             std::to_string(cells.size()),
                         trim(rows[r]));
    }
    for (std::size_t c = 0; c < kResourceCount; ++c) {
      auto value = parse_number(cells[c]);
      if (!value) return shape_error("non-numeric entry", trim(cells[c]));
      if (r == c) {
        if (!std::isfinite(*value) || *value <= 0.0) {
          return shape_error("diagonal entries must be positive", trim(cells[c]));
        }
        diag[r] = *value;
      } else if (std::abs(*value) > kEpsilon) {
        return shape_error("off-diagonal entry (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + ") must be 0.0",
                           trim(cells[c]));
      }
    }
  }
  return TransferMatrix(diag);
}

ParseResult<Decision> parse_decision(std::string_view raw, const std::vector<CivName>& known_civs) {
  const FieldMap fields = split_fields(raw);

  for (auto name : {field::kPoliticalSystem, field::kTransferMatrix}) {
    if (fields.find(name) == fields.end()) {
      return make_error(ParseErrorKind::MissingField, name, "field is missing", {});
    }
  }

  Decision d;
  const std::string_view ws_text = fields.at(field::kPoliticalSystem);
  auto ws = parse_worldview(strip_chars(ws_text, ".\"'"));
  if (!ws) {
    return make_error(ParseErrorKind::UnknownWorldview, field::kPoliticalSystem,
                      "political system must be militarism, friendly_cooperation or concealment",
                      ws_text);
  }
  d.worldview = *ws;

  auto matrix = parse_matrix_text(fields.at(field::kTransferMatrix));
  if (!matrix) return matrix.error();
  d.matrix = matrix.value();

  auto actions = parse_actions(fields, known_civs, /*require_public=*/true);
  if (!actions) return actions.error();
  d.public_actions = std::move(actions.value().public_actions);
  d.private_action = actions.value().private_action;

  d.worldview_reason = std::string(field_or_empty(fields, field::kPoliticalSystemReason));
  d.matrix_reason = std::string(field_or_empty(fields, field::kTransferMatrixReason));
  d.action_reason = std::string(field_or_empty(fields, field::kActionReason));
  d.other_info = std::string(field_or_empty(fields, field::kOtherInformation));
  d.discovered_names =
      parse_discovered(field_or_empty(fields, field::kDiscoveredCivilization), known_civs);
  return d;
}

ParseResult<ActionFields> parse_action_fields(std::string_view raw,
                                              const std::vector<CivName>& known_civs) {
  const FieldMap fields = split_fields(raw);
  if (fields.find(field::kPublicAction) == fields.end() &&
      fields.find(field::kPrivateAction) == fields.end()) {
    return make_error(ParseErrorKind::MissingField, field::kPublicAction,
                      "no action fields present", {});
  }
  return parse_actions(fields, known_civs, /*require_public=*/false);
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string format_matrix(const TransferMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    if (r > 0) out += "\n ";
    for (std::size_t c = 0; c < kResourceCount; ++c) {
      if (c > 0) out += ", ";
      out += r == c ? format_real(m[r]) : "0.0";
    }
    if (r + 1 < kResourceCount) out += ";";
  }
  out += "]";
  return out;
}

std::string format_public_action(const PublicAction& a) {
  if (std::holds_alternative<DoNothing>(a)) return "Do Nothing";
  const std::string name = *counterpart(a);
  if (std::holds_alternative<RejectCooperation>(a)) {
    return "reject_cooperation from civilization " + name;
  }
  return std::string(action_kind(a)) + " towards civilization " + name;
}

std::string format_private_action(PrivateAction a) {
  return a == PrivateAction::MobilizeForWar ? "War mobilization" : "Do Nothing";
}

std::string render_decision(const Decision& d) {
  auto line = [](std::string_view name, std::string_view value) {
    std::string s = "[" + std::string(name) + ": ] ";
    s += value;
    s += "\n";
    return s;
  };
  std::string actions;
  for (std::size_t i = 0; i < d.public_actions.size(); ++i) {
    if (i > 0) actions += "\n";
    actions += format_public_action(d.public_actions[i]);
  }
  std::string discovered;
  for (std::size_t i = 0; i < d.discovered_names.size(); ++i) {
    if (i > 0) discovered += ", ";
    discovered += d.discovered_names[i];
  }

  std::string out;
  out += line(field::kPoliticalSystem, prompt_name(d.worldview));
  out += line(field::kPoliticalSystemReason, d.worldview_reason);
  out += line(field::kTransferMatrix, "\n" + format_matrix(d.matrix));
  out += line(field::kTransferMatrixReason, d.matrix_reason);
  out += line(field::kPublicAction, actions);
  out += line(field::kPrivateAction, format_private_action(d.private_action));
  out += line(field::kActionReason, d.action_reason);
  out += line(field::kOtherInformation, d.other_info);
  out += line(field::kDiscoveredCivilization, discovered);
  return out;
}

ParseResult<SecretaryReply> parse_secretary_reply(std::string_view text) {
  auto find_value = [&](std::string_view header) -> std::optional<std::string_view> {
    const std::string hay = lower(text);
    const std::string needle = lower(header);
    auto pos = hay.find(needle);
    if (pos == std::string::npos) return std::nullopt;
    auto start = pos + needle.size();
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    return trim(text.substr(start, end - start));
  };
  auto verdict = find_value("[Verification:]");
  if (!verdict) {
    return make_error(ParseErrorKind::MissingField, "Verification", "reviewer reply lacks a verdict",
                      text.substr(0, std::min<std::size_t>(text.size(), 80)));
  }
  const std::string v = normalize(strip_chars(*verdict, ".\"'"));
  SecretaryReply reply;
  if (v == "yes") {
    reply.approved = true;
  } else if (v == "no") {
    reply.approved = false;
    auto reason = find_value("[Rejection Reason:]");
    reply.reason = reason && !reason->empty() ? std::string(*reason) : "rejected by reviewer";
  } else {
    return make_error(ParseErrorKind::UnknownAction, "Verification",
                      "verdict must be Yes or No", *verdict);
  }
  return reply;
}

}  // namespace cosmo
