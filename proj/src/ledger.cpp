#include "sgqw/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sgqw {

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

BoundEntry make_entry(std::string name, double lhs, Relation relation, double rhs,
                      std::string hypothesis, bool hypothesis_holds,
                      std::optional<double> tolerance) {
  BoundEntry e;
  e.name = std::move(name);
  e.lhs = lhs;
  e.rhs = rhs;
  e.relation = relation;
  e.hypothesis = std::move(hypothesis);
  e.hypothesis_holds = hypothesis_holds;
  switch (relation) {
    case Relation::LessEqual: e.slack = rhs - lhs; break;
    case Relation::GreaterEqual: e.slack = lhs - rhs; break;
    case Relation::Equal: e.slack = -std::abs(lhs - rhs); break;
  }
  if (hypothesis_holds) {
    const double allowance =
        tolerance.value_or(kRelativeSlackTolerance * std::max(1.0, std::abs(rhs)));
    e.passed = std::isfinite(e.slack) && e.slack >= -allowance;
  }
  return e;
}

}  // namespace sgqw
