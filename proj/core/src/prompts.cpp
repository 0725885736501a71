#include <string>

#include "cosmo/protocol.hpp"
#include "prompt_templates.hpp"

namespace cosmo {
namespace {

void replace_all(std::string& text, std::string_view placeholder, std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(placeholder, pos)) != std::string::npos) {
    text.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
}

std::string render_resources(const ResourceVector& r) {
  std::string out = "{";
  for (std::size_t k = 0; k < kResourceCount; ++k) {
    if (k > 0) out += ", ";
    out += to_string(kAllResourceKinds[k]);
    out += ": ";
    out += format_real(r[k]);
  }
  return out + "}";
}

std::string render_entry(const HistoryEntry& e) {
  std::string out = "round " + std::to_string(e.round);
  if (e.current) out += " (current)";
  out += ": {resources: " + render_resources(e.resources);
  if (e.worldview) out += ", political_system: " + std::string(prompt_name(*e.worldview));
  if (e.matrix) {
    out += ", transfer_matrix_diagonal: [";
    for (std::size_t k = 0; k < kResourceCount; ++k) {
      if (k > 0) out += ", ";
      out += format_real((*e.matrix)[k]);
    }
    out += "]";
  }
  if (!e.current) {
    out += ", public_action: [";
    for (std::size_t i = 0; i < e.public_actions.size(); ++i) {
      if (i > 0) out += "; ";
      out += format_public_action(e.public_actions[i]);
    }
    out += "]";
  }
  if (e.private_action) out += ", private_action: " + format_private_action(*e.private_action);
  return out + "}";
}

std::string indent_block(const std::vector<HistoryEntry>& history, std::string_view pad) {
  if (history.empty()) return "{}";
  std::string out = "{\n";
  for (const auto& e : history) {
    out += pad;
    out += "  ";
    out += render_entry(e);
    out += "\n";
  }
  out += pad;
  out += "}";
  return out;
}

}  // namespace

std::string render_history(const std::vector<HistoryEntry>& history) {
  return indent_block(history, "");
}

std::string render_discovered(const std::vector<DiscoveredHistory>& discovered) {
  if (discovered.empty()) return "{}";
  std::string out = "{\n";
  for (const auto& d : discovered) {
    out += "  " + d.name + ": " + indent_block(d.history, "  ") + "\n";
  }
  return out + "}";
}

std::string build_cosmo_prompt(const PromptContext& ctx) {
  std::string prompt(detail::kCosmoPromptTemplate);
  replace_all(prompt, "{self.HISTORY}", render_history(ctx.history));
  replace_all(prompt, "{self.POLITICAL_SYSTEM}", prompt_name(ctx.worldview));
  replace_all(prompt, "{self.DISCOVERED_CIVILIZATION_RESOURCES}",
              render_discovered(ctx.discovered));
  if (ctx.previous_rejection) {
    prompt += "\n[Previous Rejection: ] " + *ctx.previous_rejection;
  }
  return prompt;
}

std::string build_secretary_prompt(Worldview worldview, const Decision& decision) {
  std::string action;
  for (const auto& a : decision.public_actions) {
    if (!action.empty()) action += "; ";
    action += format_public_action(a);
  }
  if (action.empty()) action = "Do Nothing";
  action += " / private action: " + format_private_action(decision.private_action);

  std::string prompt(detail::kSecretaryPromptTemplate);
  replace_all(prompt, "{political_system}", prompt_name(worldview));
  replace_all(prompt, "{action}", action);
  replace_all(prompt, "{proposed_matrix}", format_matrix(decision.matrix));
  return prompt;
}

}  // namespace cosmo
