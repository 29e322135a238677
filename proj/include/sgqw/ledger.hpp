#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgqw {

enum class Relation { LessEqual, GreaterEqual, Equal };

std::string_view to_string(Relation r) noexcept;

/// One evaluated inequality or identity. `passed` is empty when the
/// hypothesis does not hold (the entry is reported as skipped).
struct BoundEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::LessEqual;
  std::string hypothesis;
  bool hypothesis_holds = true;
  std::optional<bool> passed;
  double slack = 0.0;  // rhs - lhs for <=, lhs - rhs for >=, -|lhs - rhs| for =

  bool failed() const noexcept { return passed.has_value() && !*passed; }
  bool skipped() const noexcept { return !passed.has_value(); }
};

/// Floating-point allowance for strict mathematical inequalities: slack may
/// go negative by at most 1e-9 * max(1, |rhs|).
inline constexpr double kRelativeSlackTolerance = 1e-9;

/// Builds an entry, computing slack and the verdict. `tolerance` overrides
/// the default allowance for identities checked against numerical routes.
BoundEntry make_entry(std::string name, double lhs, Relation relation, double rhs,
                      std::string hypothesis = "none", bool hypothesis_holds = true,
                      std::optional<double> tolerance = std::nullopt);

}  // namespace sgqw
