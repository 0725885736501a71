#pragma once

#include <string_view>

namespace cosmo::detail {

/// Placeholders: {self.HISTORY}, {self.POLITICAL_SYSTEM},
/// {self.DISCOVERED_CIVILIZATION_RESOURCES}.
extern const std::string_view kCosmoPromptTemplate;

/// Placeholders: {political_system}, {action}, {proposed_matrix}.
extern const std::string_view kSecretaryPromptTemplate;

}  // namespace cosmo::detail
