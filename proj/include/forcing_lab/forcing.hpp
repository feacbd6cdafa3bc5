#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forcing_lab/requirement.hpp"

namespace forcing_lab {

/// Forcing condition: a stem plus an upward-closed bad set known to be
/// k-small above the stem for the tracked parameter k <= h(|stem|).
/// Smallness is re-verified by the engine whenever a condition is built.
struct Condition {
  BoundedString stem;
  StringSet bad;
  int k = 0;
};

Condition make_condition(BoundedString stem, StringSet bad, int k);
bool check_condition(const Condition& c);

/// (epsilon, b_dnc(t), 2); the diagonal bad set is its own 2-closure, which
/// the engine asserts for small tables.
Condition initial_condition(const MachineTable& t, const Order& h);

/// c2 extends c1: longer stem, larger bad set.
bool extends(const Condition& c2, const Condition& c1);

/// bad k-small above the stem and h(|stem|) >= 4k.
bool is_roomy(const Condition& c, int k);

struct SettleBounds {
  int x_max = 4;
  int a_size = 3;
  int y_max = 8;
  int f_bound = 3;
  int depth = 4;
  int universe = 32;
};

struct EssentialVerdict {
  bool essential = false;
  std::optional<int> failing_x;  // least failing x when not essential
  SettleBounds bounds;
};

/// Bounded essentialness: for each x <= x_max some A0 > x (size <= a_size,
/// within the universe) works for every y <= y_max via some A1 > y. The
/// verdict always records the bounds it was computed under.
EssentialVerdict is_essential(const Requirement& k, const Condition& c, const SettleBounds& bounds);

struct Clause1 {
  BoundedString tau;
};
struct Clause2 {
  int x = 0;
  StringSet added;
};
struct BoundExhausted {
  std::string stuck_step;
};

struct SettleOutcome {
  std::variant<BoundExhausted, Clause1, Clause2> value;
  std::vector<std::string> trace;
  bool case2_equality_checked = false;
  bool case2_equality_holds = true;

  bool is_clause1() const { return std::holds_alternative<Clause1>(value); }
  bool is_clause2() const { return std::holds_alternative<Clause2>(value); }
  bool is_bound_exhausted() const { return std::holds_alternative<BoundExhausted>(value); }
  const Clause1& clause1() const { return std::get<Clause1>(value); }
  const Clause2& clause2() const { return std::get<Clause2>(value); }
  const BoundExhausted& bound_exhausted() const { return std::get<BoundExhausted>(value); }
};

/// Extends c to a condition settling K over the graph: either the stem
/// enters the requirement (clause 1) or the requirement's tail instances
/// beyond some x are absorbed into the bad set (clause 2, with the tracked
/// parameter growing as the smallness budget dictates). Bounded searches
/// that run out return BoundExhausted and leave the condition untouched.
std::pair<Condition, SettleOutcome> settle(const Requirement& k, const Condition& c,
                                           const Graph& g, const SettleBounds& bounds);

/// Re-checks a settle certificate against the condition it produced.
bool verify_settled(const Requirement& k, const Graph& g, const Condition& c,
                    const SettleOutcome& outcome, const SettleBounds& bounds);

struct GenericStep {
  int step = 0;
  std::string requirement;
  Condition condition;
  std::optional<SettleOutcome> outcome;
};

struct GenericResult {
  BoundedString stem;
  std::vector<GenericStep> trace;
};

/// Alternates stem extension (one child per step, dodging the bad set) with
/// settling the next requirement from the roster.
GenericResult build_generic(const MachineTable& t, const std::vector<Requirement>& reqs,
                            const Graph& g, int steps, const SettleBounds& bounds, const Order& h);

}  // namespace forcing_lab
