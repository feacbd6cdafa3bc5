#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/harness.hpp"

using namespace forcing_lab;

namespace {

Order h888() { return Order({8, 8, 8}); }

Graph path2() {
  return Graph({0, 1, 2}, {VertexPair(0, 1), VertexPair(1, 2)});
}

FunctionalTable always_one(const Order& h, int max_input) {
  std::map<std::pair<Word, int>, int> entries;
  std::function<void(Word&, int)> fill = [&](Word& prefix, int x) {
    if (static_cast<int>(prefix.size()) == x + 1) {
      entries[{prefix, x}] = 1;
      return;
    }
    int width = h.branching(static_cast<int>(prefix.size()));
    for (int a = 0; a < width; ++a) {
      prefix.push_back(a);
      fill(prefix, x);
      prefix.pop_back();
    }
  };
  for (int x = 0; x <= max_input && x + 1 <= h.depth(); ++x) {
    Word scratch;
    fill(scratch, x);
  }
  return FunctionalTable(std::move(entries));
}

SettleBounds small_bounds() {
  SettleBounds b;
  b.x_max = 2;
  b.a_size = 2;
  b.y_max = 4;
  b.f_bound = 2;
  b.depth = 3;
  b.universe = 6;
  return b;
}

}  // namespace

TEST_CASE("initial conditions") {
  Order h = h888();
  Condition c0 = initial_condition(MachineTable(), h);
  CHECK(c0.stem.is_empty());
  CHECK(c0.bad.is_empty());
  CHECK(c0.k == 2);

  Condition c1 = initial_condition(MachineTable(std::map<int, int>{{0, 1}}), h);
  CHECK(c1.bad.members() == std::set<Word>{{1}});
  CHECK(check_condition(c1));
}

TEST_CASE("random initial conditions pass the invariant") {
  SplitMix64 rng(501);
  for (int trial = 0; trial < 60; ++trial) {
    Order h = random_order(rng);
    Condition c = initial_condition(random_machine_table(h, rng), h);
    CHECK(check_condition(c));
    // the diagonal bad set is its own 2-closure
    StringSet closed = k_closure(c.bad, 2, std::max(1, c.bad.max_member_length()));
    CHECK(closed.same_contents(c.bad, h.depth()));
  }
}

TEST_CASE("extension order on conditions") {
  Order h = h888();
  Condition base = initial_condition(MachineTable(std::map<int, int>{{0, 1}}), h);
  CHECK(extends(base, base));

  Condition longer = make_condition(BoundedString(h, {0}), base.bad, 2);
  CHECK(extends(longer, base));
  CHECK_FALSE(extends(base, longer));

  Condition shrunk = make_condition(BoundedString(h, {0}), StringSet::empty_upward(h), 2);
  CHECK_FALSE(extends(shrunk, longer));
}

TEST_CASE("roominess needs branching at least four k") {
  Order h8 = h888();
  Condition c = initial_condition(MachineTable(), h8);
  CHECK(is_roomy(c, 2));

  Order h7({7, 7});
  Condition c7 = initial_condition(MachineTable(), h7);
  CHECK_FALSE(is_roomy(c7, 2));

  SplitMix64 rng(503);
  for (int trial = 0; trial < 50; ++trial) {
    Condition random_c = initial_condition(random_machine_table(h8, rng), h8);
    CHECK(is_roomy(random_c, 2));
  }
}

TEST_CASE("essentialness fails immediately for the never-true relation") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement never("never", [](const BoundedString&, const PairSet&) { return false; });
  EssentialVerdict v = is_essential(never, c, small_bounds());
  CHECK_FALSE(v.essential);
  CHECK(v.failing_x == 0);
}

TEST_CASE("degenerate bounds report the failing zero immediately") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement never = w_requirement("W-never", FunctionalTable());
  SettleBounds b = small_bounds();
  b.x_max = 0;
  EssentialVerdict v = is_essential(never, c, b);
  CHECK_FALSE(v.essential);
  CHECK(v.failing_x == 0);
}

TEST_CASE("the always-one requirement is essential within small bounds") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement w = w_requirement("W", always_one(h, 2));
  SettleBounds b = small_bounds();
  b.x_max = 1;
  b.y_max = 1;
  b.universe = 2;
  EssentialVerdict v = is_essential(w, c, b);
  CHECK(v.essential);
}

TEST_CASE("never-one settles via clause two with an empty added set") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement never = w_requirement("W-never", FunctionalTable());
  auto [settled, outcome] = settle(never, c, path2(), small_bounds());
  REQUIRE(outcome.is_clause2());
  CHECK(outcome.clause2().x == 0);
  CHECK(outcome.clause2().added.is_empty());
  CHECK(settled.k == 8);
  CHECK(verify_settled(never, path2(), settled, outcome, small_bounds()));
}

TEST_CASE("always-one over a path settles via clause one") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement w = w_requirement("W", always_one(h, 2));
  auto [settled, outcome] = settle(w, c, path2(), small_bounds());
  REQUIRE(outcome.is_clause1());
  CHECK(outcome.clause1().tau.size() >= 1);
  CHECK(settled.k == 2);
  CHECK(extends(settled, c));
  CHECK(verify_settled(w, path2(), settled, outcome, small_bounds()));
}

TEST_CASE("bounded-output relations settle via clause two case two") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  // outputs 1 exactly on inputs 1 and 2, everywhere along the tree
  std::map<std::pair<Word, int>, int> entries;
  FunctionalTable both = [&h]() {
    std::map<std::pair<Word, int>, int> e;
    std::function<void(Word&, int)> fill = [&](Word& prefix, int x) {
      if (static_cast<int>(prefix.size()) == x + 1) {
        e[{prefix, x}] = 1;
        return;
      }
      for (int a = 0; a < h.branching(static_cast<int>(prefix.size())); ++a) {
        prefix.push_back(a);
        fill(prefix, x);
        prefix.pop_back();
      }
    };
    for (int x : {1, 2}) {
      Word scratch;
      fill(scratch, x);
    }
    return FunctionalTable(std::move(e));
  }();
  Requirement w = w_requirement("W-bounded", both);
  // the graph lives on vertices the functional never maps to one, and
  // singleton supports cannot ride a shared loop vertex past y
  Graph far({4, 5, 6}, {VertexPair(4, 5), VertexPair(5, 6)});
  SettleBounds bounds = small_bounds();
  bounds.a_size = 1;
  auto [settled, outcome] = settle(w, c, far, bounds);
  REQUIRE(outcome.is_clause2());
  CHECK(settled.k == 6);  // case two triples the tracked parameter
  CHECK(outcome.clause2().x >= 2);
  CHECK(outcome.case2_equality_checked);
  CHECK(outcome.case2_equality_holds);
  CHECK(verify_settled(w, far, settled, outcome, bounds));
}

TEST_CASE("case two survives a y witness at the universe bound") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  FunctionalTable both = [&h]() {
    std::map<std::pair<Word, int>, int> e;
    std::function<void(Word&, int)> fill = [&](Word& prefix, int x) {
      if (static_cast<int>(prefix.size()) == x + 1) {
        e[{prefix, x}] = 1;
        return;
      }
      for (int a = 0; a < h.branching(static_cast<int>(prefix.size())); ++a) {
        prefix.push_back(a);
        fill(prefix, x);
        prefix.pop_back();
      }
    };
    for (int x : {1, 2}) {
      Word scratch;
      fill(scratch, x);
    }
    return FunctionalTable(std::move(e));
  }();
  Requirement w = w_requirement("W-edge", both);
  Graph far({4, 5, 6}, {VertexPair(4, 5), VertexPair(5, 6)});
  SettleBounds bounds = small_bounds();
  bounds.a_size = 1;
  bounds.universe = 2;  // the tail window past y is empty
  auto [settled, outcome] = settle(w, c, far, bounds);
  REQUIRE(outcome.is_clause2());
  CHECK(outcome.clause2().added.is_empty());
  CHECK(verify_settled(w, far, settled, outcome, bounds));
}

TEST_CASE("settled conditions re-pass the invariant and extend the input") {
  SplitMix64 rng(509);
  Order h = h888();
  int settled_count = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Condition c = initial_condition(random_machine_table(h, rng), h);
    Requirement w = w_requirement("W", random_functional(h, rng, 2, 20));
    auto [settled, outcome] = settle(w, c, path2(), small_bounds());
    if (outcome.is_bound_exhausted()) continue;
    ++settled_count;
    CHECK(check_condition(settled));
    CHECK(extends(settled, c));
    CHECK(verify_settled(w, path2(), settled, outcome, small_bounds()));
  }
  CHECK(settled_count > 0);
}

TEST_CASE("forged clause-one certificates fail verification") {
  Order h = h888();
  Condition c = initial_condition(MachineTable(), h);
  Requirement never = w_requirement("W-never", FunctionalTable());
  SettleOutcome forged;
  forged.value = Clause1{BoundedString(h, {0})};
  Condition fake = make_condition(BoundedString(h, {0}), c.bad, 2);
  CHECK_FALSE(verify_settled(never, path2(), fake, forged, small_bounds()));
}

TEST_CASE("settling persists under extension") {
  SplitMix64 rng(521);
  Order h = h888();
  for (int trial = 0; trial < 40; ++trial) {
    Condition c = initial_condition(random_machine_table(h, rng), h);
    Requirement w = w_requirement("W", random_functional(h, rng, 2, 16));
    auto [settled, outcome] = settle(w, c, path2(), small_bounds());
    if (outcome.is_bound_exhausted()) continue;

    // grow the stem and the bad set arbitrarily, keeping the condition valid
    Condition wider = settled;
    for (int step = 0; step < 2 && wider.stem.size() < h.depth(); ++step) {
      for (int a = 0; a < h.branching(wider.stem.size()); ++a) {
        BoundedString candidate = wider.stem.child(a);
        if (wider.bad.contains(candidate.entries())) continue;
        if (!is_k_big(wider.bad, wider.k, candidate, h.depth()).is_big()) {
          wider.stem = candidate;
          break;
        }
      }
    }
    CHECK(extends(wider, settled));
    CHECK(verify_settled(w, path2(), wider, outcome, small_bounds()));
  }
}

TEST_CASE("generic run with no requirements extends by least children") {
  Order h({3, 3, 3});
  GenericResult run = build_generic(MachineTable(), {}, path2(), 3, small_bounds(), h);
  CHECK(run.stem.entries() == Word{0, 0, 0});
}

TEST_CASE("generic run settles a never-one requirement and stays diagonal") {
  Order h = h888();
  MachineTable t(std::map<int, int>{{0, 0}});
  Requirement never = w_requirement("W-never", FunctionalTable());
  GenericResult run = build_generic(t, {never}, path2(), 2, small_bounds(), h);
  CHECK(run.stem.size() >= 2);
  CHECK(is_dnc(run.stem, t));
  bool saw_clause2 = false;
  for (const GenericStep& step : run.trace) {
    if (step.outcome && step.outcome->is_clause2()) saw_clause2 = true;
    CHECK(check_condition(step.condition));
    CHECK(step.condition.bad.contains({0}));  // the diagonal stays inside
  }
  CHECK(saw_clause2);
}

TEST_CASE("tracked parameters grow at most fourfold and stay under the branching") {
  SplitMix64 rng(523);
  Order h = h888();
  for (int trial = 0; trial < 20; ++trial) {
    MachineTable t = random_machine_table(h, rng);
    Requirement w = w_requirement("W", random_functional(h, rng, 2, 10));
    GenericResult run = build_generic(t, {w}, path2(), 1, small_bounds(), h);
    int previous = 2;
    for (const GenericStep& step : run.trace) {
      CHECK(step.condition.k <= 4 * previous);
      previous = step.condition.k;
      int level = std::min(step.condition.stem.size(), h.depth() - 1);
      CHECK(step.condition.k <= h.branching(level));
    }
  }
}
