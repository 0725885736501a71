#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cosmo {

/// Tolerance used by every numeric comparison in the model.
inline constexpr double kEpsilon = 1e-9;

inline constexpr std::size_t kResourceCount = 5;

/// Canonical resource order. Matrix rows, serialization and prompts all use it.
enum class ResourceKind : std::size_t {
  MilitaryCapability = 0,
  TechnologyDevelopment = 1,
  ProductionCapability = 2,
  Consumption = 3,
  Storage = 4,
};

inline constexpr std::array<ResourceKind, kResourceCount> kAllResourceKinds{
    ResourceKind::MilitaryCapability, ResourceKind::TechnologyDevelopment,
    ResourceKind::ProductionCapability, ResourceKind::Consumption,
    ResourceKind::Storage};

std::string_view to_string(ResourceKind kind);

/// Raised when growth leaves the representable range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Five non-negative, finite resource amounts.
class ResourceVector {
 public:
  ResourceVector() = default;
  /// Throws std::invalid_argument if any entry is negative or non-finite.
  explicit ResourceVector(const std::array<double, kResourceCount>& values);

  static ResourceVector filled(double value);

  double operator[](ResourceKind kind) const {
    return values_[static_cast<std::size_t>(kind)];
  }
  double operator[](std::size_t index) const { return values_.at(index); }

  double military() const { return (*this)[ResourceKind::MilitaryCapability]; }
  double technology() const { return (*this)[ResourceKind::TechnologyDevelopment]; }

  /// Returns a copy with one entry replaced (validated like the constructor).
  ResourceVector with(ResourceKind kind, double value) const;

  const std::array<double, kResourceCount>& values() const { return values_; }

  friend bool operator==(const ResourceVector&, const ResourceVector&) = default;

 private:
  std::array<double, kResourceCount> values_{};
};

ResourceVector operator+(const ResourceVector& a, const ResourceVector& b);

/// Diagonal 5x5 growth operator. Only the diagonal is stored.
class TransferMatrix {
 public:
  /// Throws std::invalid_argument unless every entry is finite and > 0.
  explicit TransferMatrix(const std::array<double, kResourceCount>& diag);

  static TransferMatrix uniform(double value);

  double operator[](ResourceKind kind) const {
    return diag_[static_cast<std::size_t>(kind)];
  }
  double operator[](std::size_t index) const { return diag_.at(index); }
  double military() const { return (*this)[ResourceKind::MilitaryCapability]; }
  double trace() const;

  const std::array<double, kResourceCount>& diag() const { return diag_; }

  friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

 private:
  std::array<double, kResourceCount> diag_{};
};

enum class Worldview { Pacifism, Militarism, Isolationism };

/// Canonical name ("pacifism", "militarism", "isolationism").
std::string_view to_string(Worldview w);
/// Name used inside agent prompts and decision text
/// ("friendly_cooperation", "militarism", "concealment").
std::string_view prompt_name(Worldview w);
/// Accepts canonical names and prompt aliases, case-insensitively.
std::optional<Worldview> parse_worldview(std::string_view text);

using CivName = std::string;

struct ExpressFriendliness {
  CivName target;
  friend bool operator==(const ExpressFriendliness&, const ExpressFriendliness&) = default;
};
struct InitiateCooperation {
  CivName target;
  friend bool operator==(const InitiateCooperation&, const InitiateCooperation&) = default;
};
struct LaunchAnnihilationWar {
  CivName target;
  friend bool operator==(const LaunchAnnihilationWar&, const LaunchAnnihilationWar&) = default;
};
struct RejectCooperation {
  CivName source;
  friend bool operator==(const RejectCooperation&, const RejectCooperation&) = default;
};
struct DoNothing {
  friend bool operator==(const DoNothing&, const DoNothing&) = default;
};

using PublicAction = std::variant<ExpressFriendliness, InitiateCooperation,
                                  LaunchAnnihilationWar, RejectCooperation, DoNothing>;

/// The civilization an action is aimed at, if any.
std::optional<CivName> counterpart(const PublicAction& action);
/// Wire name, e.g. "launch_annihilation_war" or "do_nothing".
std::string_view action_kind(const PublicAction& action);
bool is_war(const PublicAction& action);

enum class PrivateAction { DoNothing, MobilizeForWar };

std::string_view to_string(PrivateAction a);

/// One round's validated output of a civilization agent.
struct Decision {
  Worldview worldview = Worldview::Pacifism;
  std::string worldview_reason;
  TransferMatrix matrix = TransferMatrix::uniform(1.8);
  std::string matrix_reason;
  std::vector<PublicAction> public_actions;
  PrivateAction private_action = PrivateAction::DoNothing;
  std::string action_reason;
  std::string other_info;
  std::vector<CivName> discovered_names;

  friend bool operator==(const Decision&, const Decision&) = default;
};

/// Public action lists compare equal when they differ only by a bare DoNothing.
bool same_public_actions(const std::vector<PublicAction>& a,
                         const std::vector<PublicAction>& b);

enum class ConstraintRegime { Default, Mobilization, Cooperation };

std::string_view to_string(ConstraintRegime r);

struct ConstraintContext {
  PrivateAction private_action = PrivateAction::DoNothing;
  std::vector<PublicAction> public_actions;
  bool cooperation_active = false;
};

enum class MatrixViolation {
  EntryBelowMinimum,
  EntryAboveMaximum,
  MilitaryAboveMaximum,
  MilitaryNotBelowCooperationCap,
  DiagonalSumExceeded,
  DiagonalSumNotEqual,
};

std::string_view to_string(MatrixViolation v);

struct ValidationResult {
  std::optional<MatrixViolation> violation;
  std::string reason;

  bool accepted() const { return !violation.has_value(); }
  static ValidationResult accept() { return {}; }
  static ValidationResult reject(MatrixViolation v, std::string reason) {
    return {v, std::move(reason)};
  }
};

/// Bounds of each regime; exposed so prompts and doctrines agree with the checker.
namespace limits {
inline constexpr double kEntryMin = 1.0;
inline constexpr double kEntryMax = 2.5;
inline constexpr double kDefaultSumMax = 9.0;
inline constexpr double kMobilizationMilitaryMax = 3.5;
inline constexpr double kMobilizationSum = 9.0;
inline constexpr double kCooperationMilitaryCap = 1.6;
inline constexpr double kCooperationSumMax = 10.0;
}  // namespace limits

/// result[k] = diag[k] * v[k]. Throws OverflowError on a non-finite product.
ResourceVector apply_transfer(const TransferMatrix& matrix, const ResourceVector& v);

/// Mobilization dominates cooperation; Default when neither applies.
ConstraintRegime matrix_regime(const ConstraintContext& ctx);

ValidationResult check_matrix(const TransferMatrix& matrix, ConstraintRegime regime);

enum class WarResult { Success, Failure };

/// Success iff the attacker has at least twice the defender's military.
WarResult war_outcome(double attacker_military, double defender_military);

/// Half of every non-military resource; military is never looted.
ResourceVector war_loot(const ResourceVector& defender);

struct Attrition {
  double attacker_after = 0.0;
  double defender_after = 0.0;
};

/// Lanchester square law with unit effectiveness on both sides.
Attrition lanchester_attrition(double attacker_military, double defender_military);

}  // namespace cosmo
