#include "cosmo/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace cosmo {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::MilitaryCapability: return "military_capability";
    case ResourceKind::TechnologyDevelopment: return "technology_development";
    case ResourceKind::ProductionCapability: return "production_capability";
    case ResourceKind::Consumption: return "consumption";
    case ResourceKind::Storage: return "storage";
  }
  return "unknown";
}

ResourceVector::ResourceVector(const std::array<double, kResourceCount>& values)
    : values_(values) {
  for (std::size_t k = 0; k < kResourceCount; ++k) {
    if (!std::isfinite(values_[k]) || values_[k] < 0.0) {
      throw std::invalid_argument("resource " +
                                  std::string(to_string(kAllResourceKinds[k])) +
                                  " must be finite and non-negative");
    }
  }
}

ResourceVector ResourceVector::filled(double value) {
  std::array<double, kResourceCount> v;
  v.fill(value);
  return ResourceVector(v);
}

ResourceVector ResourceVector::with(ResourceKind kind, double value) const {
  auto v = values_;
  v[static_cast<std::size_t>(kind)] = value;
  return ResourceVector(v);
}

ResourceVector operator+(const ResourceVector& a, const ResourceVector& b) {
  std::array<double, kResourceCount> out{};
  for (std::size_t k = 0; k < kResourceCount; ++k) out[k] = a[k] + b[k];
  return ResourceVector(out);
}

TransferMatrix::TransferMatrix(const std::array<double, kResourceCount>& diag)
    : diag_(diag) {
  for (double d : diag_) {
    if (!std::isfinite(d) || d <= 0.0) {
      throw std::invalid_argument("transfer matrix diagonal entries must be finite and > 0");
    }
  }
}

TransferMatrix TransferMatrix::uniform(double value) {
  std::array<double, kResourceCount> d;
  d.fill(value);
  return TransferMatrix(d);
}

double TransferMatrix::trace() const {
  return std::accumulate(diag_.begin(), diag_.end(), 0.0);
}

std::string_view to_string(Worldview w) {
  switch (w) {
    case Worldview::Pacifism: return "pacifism";
    case Worldview::Militarism: return "militarism";
    case Worldview::Isolationism: return "isolationism";
  }
  return "unknown";
}

std::string_view prompt_name(Worldview w) {
  switch (w) {
    case Worldview::Pacifism: return "friendly_cooperation";
    case Worldview::Militarism: return "militarism";
    case Worldview::Isolationism: return "concealment";
  }
  return "unknown";
}

std::optional<Worldview> parse_worldview(std::string_view text) {
  std::string s = lowercase(text);
  std::replace(s.begin(), s.end(), ' ', '_');
  if (s == "pacifism" || s == "friendly_cooperation") return Worldview::Pacifism;
  if (s == "militarism") return Worldview::Militarism;
  if (s == "isolationism" || s == "concealment") return Worldview::Isolationism;
  return std::nullopt;
}

std::optional<CivName> counterpart(const PublicAction& action) {
  return std::visit(
      overloaded{[](const ExpressFriendliness& a) -> std::optional<CivName> { return a.target; },
                 [](const InitiateCooperation& a) -> std::optional<CivName> { return a.target; },
                 [](const LaunchAnnihilationWar& a) -> std::optional<CivName> { return a.target; },
                 [](const RejectCooperation& a) -> std::optional<CivName> { return a.source; },
                 [](const DoNothing&) -> std::optional<CivName> { return std::nullopt; }},
      action);
}

std::string_view action_kind(const PublicAction& action) {
  return std::visit(overloaded{[](const ExpressFriendliness&) { return "express_friendliness"; },
                               [](const InitiateCooperation&) { return "initiate_cooperation"; },
                               [](const LaunchAnnihilationWar&) { return "launch_annihilation_war"; },
                               [](const RejectCooperation&) { return "reject_cooperation"; },
                               [](const DoNothing&) { return "do_nothing"; }},
                    action);
}

bool is_war(const PublicAction& action) {
  return std::holds_alternative<LaunchAnnihilationWar>(action);
}

std::string_view to_string(PrivateAction a) {
  return a == PrivateAction::MobilizeForWar ? "mobilize_for_war" : "do_nothing";
}

bool same_public_actions(const std::vector<PublicAction>& a,
                         const std::vector<PublicAction>& b) {
  auto key = [](const std::vector<PublicAction>& actions) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& act : actions) {
      if (std::holds_alternative<DoNothing>(act)) continue;
      out.emplace_back(std::string(action_kind(act)), counterpart(act).value_or(""));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return key(a) == key(b);
}

std::string_view to_string(ConstraintRegime r) {
  switch (r) {
    case ConstraintRegime::Default: return "default";
    case ConstraintRegime::Mobilization: return "mobilization";
    case ConstraintRegime::Cooperation: return "cooperation";
  }
  return "unknown";
}

std::string_view to_string(MatrixViolation v) {
  switch (v) {
    case MatrixViolation::EntryBelowMinimum: return "entry_below_minimum";
    case MatrixViolation::EntryAboveMaximum: return "entry_above_maximum";
    case MatrixViolation::MilitaryAboveMaximum: return "military_above_maximum";
    case MatrixViolation::MilitaryNotBelowCooperationCap: return "military_not_below_cooperation_cap";
    case MatrixViolation::DiagonalSumExceeded: return "diagonal_sum_exceeded";
    case MatrixViolation::DiagonalSumNotEqual: return "diagonal_sum_not_equal";
  }
  return "unknown";
}

ResourceVector apply_transfer(const TransferMatrix& matrix, const ResourceVector& v) {
  std::array<double, kResourceCount> out{};
  for (std::size_t k = 0; k < kResourceCount; ++k) {
    out[k] = matrix[k] * v[k];
    if (!std::isfinite(out[k])) {
      throw OverflowError("resource " + std::string(to_string(kAllResourceKinds[k])) +
                          " overflowed: " + format_number(matrix[k]) + " x " +
                          format_number(v[k]));
    }
  }
  return ResourceVector(out);
}

ConstraintRegime matrix_regime(const ConstraintContext& ctx) {
  if (ctx.private_action == PrivateAction::MobilizeForWar) return ConstraintRegime::Mobilization;
  const bool initiating = std::any_of(
      ctx.public_actions.begin(), ctx.public_actions.end(),
      [](const PublicAction& a) { return std::holds_alternative<InitiateCooperation>(a); });
  if (ctx.cooperation_active || initiating) return ConstraintRegime::Cooperation;
  return ConstraintRegime::Default;
}

ValidationResult check_matrix(const TransferMatrix& matrix, ConstraintRegime regime) {
  using namespace limits;
  const double military = matrix.military();
  const double sum = matrix.trace();

  for (std::size_t k = 0; k < kResourceCount; ++k) {
    if (matrix[k] < kEntryMin - kEpsilon) {
      return ValidationResult::reject(
          MatrixViolation::EntryBelowMinimum,
          std::string(to_string(kAllResourceKinds[k])) + " coefficient " +
              format_number(matrix[k]) + " below 1.0");
    }
  }

  if (regime == ConstraintRegime::Mobilization) {
    if (military > kMobilizationMilitaryMax + kEpsilon) {
      return ValidationResult::reject(MatrixViolation::MilitaryAboveMaximum,
                                      "military exceeds 3.5 (" + format_number(military) + ")");
    }
  } else if (regime == ConstraintRegime::Cooperation) {
    if (military >= kCooperationMilitaryCap - kEpsilon) {
      return ValidationResult::reject(
          MatrixViolation::MilitaryNotBelowCooperationCap,
          "military coefficient " + format_number(military) + " not below 1.6 under cooperation");
    }
  }

  const std::size_t first_capped = regime == ConstraintRegime::Mobilization ? 1 : 0;
  for (std::size_t k = first_capped; k < kResourceCount; ++k) {
    if (matrix[k] > kEntryMax + kEpsilon) {
      return ValidationResult::reject(
          MatrixViolation::EntryAboveMaximum,
          std::string(to_string(kAllResourceKinds[k])) + " coefficient " +
              format_number(matrix[k]) + " exceeds 2.5");
    }
  }

  switch (regime) {
    case ConstraintRegime::Default:
      if (sum > kDefaultSumMax + kEpsilon) {
        return ValidationResult::reject(MatrixViolation::DiagonalSumExceeded,
                                        "diagonal sum " + format_number(sum) + " exceeds 9.0");
      }
      break;
    case ConstraintRegime::Mobilization:
      if (std::abs(sum - kMobilizationSum) > kEpsilon) {
        return ValidationResult::reject(
            MatrixViolation::DiagonalSumNotEqual,
            "diagonal sum " + format_number(sum) + " != 9.0 under mobilization");
      }
      break;
    case ConstraintRegime::Cooperation:
      if (sum > kCooperationSumMax + kEpsilon) {
        return ValidationResult::reject(
            MatrixViolation::DiagonalSumExceeded,
            "diagonal sum " + format_number(sum) + " exceeds 10.0 under cooperation");
      }
      break;
  }
  return ValidationResult::accept();
}

WarResult war_outcome(double attacker_military, double defender_military) {
  return attacker_military >= 2.0 * defender_military - kEpsilon ? WarResult::Success
                                                                 : WarResult::Failure;
}

ResourceVector war_loot(const ResourceVector& defender) {
  std::array<double, kResourceCount> out{};
  for (std::size_t k = 1; k < kResourceCount; ++k) out[k] = defender[k] / 2.0;
  return ResourceVector(out);
}

Attrition lanchester_attrition(double attacker_military, double defender_military) {
  const double a2 = attacker_military * attacker_military;
  const double d2 = defender_military * defender_military;
  return {std::sqrt(std::max(0.0, a2 - d2)), std::sqrt(std::max(0.0, d2 - a2))};
}

}  // namespace cosmo
