#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcing_lab/harness.hpp"
#include "forcing_lab/requirement.hpp"

using namespace forcing_lab;

namespace {

Order h333() { return Order({3, 3, 3}); }

Graph path2() {
  return Graph({0, 1, 2}, {VertexPair(0, 1), VertexPair(1, 2)});
}

// Every length-(x+1) prefix maps input x to 1, for x <= max_input.
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

Requirement always_false_req() {
  return Requirement("never", [](const BoundedString&, const PairSet&) { return false; });
}

Requirement always_true_req() {
  return Requirement("always", [](const BoundedString&, const PairSet&) { return true; });
}

}  // namespace

TEST_CASE("member is false for the constantly false relation") {
  Order h = h333();
  CHECK_FALSE(member(always_false_req(), ExplicitGraphSource{path2()},
                     BoundedString(h, {1, 1}), 3));
}

TEST_CASE("no pairs means no witness for w-relations") {
  Order h = h333();
  Graph edgeless({0, 1, 2}, {});
  Requirement w = w_requirement("W0", always_one(h, 2));
  CHECK_FALSE(member(w, ExplicitGraphSource{edgeless}, BoundedString(h, {1, 1}), 3));
}

TEST_CASE("w-relation over the short path holds once the string is long enough") {
  Order h = h333();
  Requirement w = w_requirement("W0", always_one(h, 2));
  auto witness = member_witness(w, ExplicitGraphSource{path2()}, BoundedString(h, {1, 1}), 1);
  REQUIRE(witness.has_value());
  CHECK(witness->count(VertexPair(0, 1)) == 1);
  CHECK_FALSE(member(w, ExplicitGraphSource{path2()}, BoundedString(h, {1}), 1));
}

TEST_CASE("w-evaluator demands every vertex map to one") {
  Order h = h333();
  Requirement w = w_requirement("W0", FunctionalTable());
  CHECK_FALSE(w.evaluate(BoundedString(h, {1, 1}), {VertexPair(0, 1)}));
  CHECK_FALSE(w.evaluate(BoundedString(h, {1, 1}), {}));

  Requirement covered = w_requirement("W1", always_one(h, 2));
  CHECK(covered.evaluate(BoundedString(h, {1, 1}), {VertexPair(0, 1)}));
  CHECK_FALSE(covered.evaluate(BoundedString(h, {1}), {VertexPair(0, 1)}));  // use bound
  // divergent degenerate pair
  CHECK_FALSE(covered.evaluate(BoundedString(h, {1, 1}), {VertexPair(2, 2)}));
}

TEST_CASE("w-relations are singleton-monotone") {
  SplitMix64 rng(401);
  Order h = h333();
  Requirement w = w_requirement("W0", random_functional(h, rng, 2));
  for (int trial = 0; trial < 100; ++trial) {
    BoundedString tau = random_stem(h, rng, h.depth());
    int a = rng.below(3), b = rng.below(3);
    PairSet f{VertexPair(a, b)};
    if (!w.evaluate(tau, f)) continue;
    CHECK(w.evaluate(tau, {VertexPair(a, a)}));
    CHECK(w.evaluate(tau, {VertexPair(b, b)}));
  }
}

TEST_CASE("member search agrees between fast and generic routes") {
  SplitMix64 rng(403);
  Order h = h333();
  for (int trial = 0; trial < 100; ++trial) {
    FunctionalTable table = random_functional(h, rng, 2);
    Requirement fast = w_requirement("W", table);
    // same evaluator, but without the table hook: forces the generic search
    Requirement generic("W-generic", [table](const BoundedString& tau, const PairSet& f) {
      if (f.empty()) return false;
      for (const VertexPair& p : f) {
        auto va = eval_functional(table, tau, p.a);
        auto vb = eval_functional(table, tau, p.b);
        if (!va || *va != 1 || !vb || *vb != 1) return false;
      }
      return true;
    });
    BoundedString tau = random_stem(h, rng, h.depth());
    PairSource src = rng.chance(1, 2)
                         ? PairSource(BicliqueSource{{0, 1}, {1, 2}})
                         : PairSource(TailSquareSource{0, 2});
    CHECK(member(fast, src, tau, 2) == member(generic, src, tau, 2));
  }
}

TEST_CASE("member is monotone in the string and the pair budget") {
  SplitMix64 rng(407);
  Order h = h333();
  for (int trial = 0; trial < 80; ++trial) {
    Requirement w = w_requirement("W", random_functional(h, rng, 2));
    PairSource src{TailSquareSource{0, 2}};
    BoundedString tau = random_stem(h, rng, h.depth() - 1);
    if (member(w, src, tau, 1)) {
      CHECK(member(w, src, tau, 2));
      CHECK(member(w, src, tau.child(0), 1));
    }
  }
}

TEST_CASE("tail-square membership is antitone in x") {
  SplitMix64 rng(409);
  Order h = h333();
  for (int trial = 0; trial < 80; ++trial) {
    Requirement w = w_requirement("W", random_functional(h, rng, 2));
    BoundedString tau = random_stem(h, rng, h.depth());
    if (member(w, TailSquareSource{1, 3}, tau, 2)) {
      CHECK(member(w, TailSquareSource{0, 3}, tau, 2));
    }
  }
}

TEST_CASE("requirement sets are upward closed antichains") {
  Order h = h333();
  Requirement w = w_requirement("W", always_one(h, 2));
  StringSet set = requirement_set(w, ExplicitGraphSource{path2()}, h, 3, 1);
  CHECK(set.upward_closed());
  // members start exactly at length two
  for (const Word& word : set.members()) CHECK(word.size() == 2);
  CHECK(set.contains({0, 0}));
  CHECK(set.contains({2, 2, 1}));
  CHECK_FALSE(set.contains({2}));
}

TEST_CASE("requirement set matches per-string member calls") {
  SplitMix64 rng(411);
  Order h = h333();
  for (int trial = 0; trial < 60; ++trial) {
    Requirement w = w_requirement("W", random_functional(h, rng, 2));
    PairSource src{BicliqueSource{{0}, {1, 2}}};
    StringSet set = requirement_set(w, src, h, h.depth(), 2);
    BoundedString probe = random_stem(h, rng, h.depth());
    CHECK(set.contains(probe.entries()) == member(w, src, probe, 2));
  }
}

TEST_CASE("tree enumeration starts with the stem path and grows by one node") {
  Order h = h333();
  BoundedString xi(h, {1});
  auto trees = enumerate_trees(xi, 5);
  REQUIRE(trees.size() == 5);
  CHECK(trees[0].nodes() == std::set<Word>{{}, {1}});
  for (size_t i = 1; i < 4; ++i) {
    CHECK(trees[i].nodes().size() == 3);
  }
  // deterministic: re-enumeration is identical
  auto again = enumerate_trees(xi, 5);
  for (size_t i = 0; i < trees.size(); ++i) CHECK(trees[i] == again[i]);
}

TEST_CASE("propagation requirement with an always-true base") {
  Order h = h333();
  BoundedString xi(h, {1});
  Requirement prop =
      propagation_requirement(always_true_req(), xi, 1, ExplicitGraphSource{path2()}, 1);
  // the stem-path tree has code zero, so membership holds from the start
  CHECK(member(prop, ExplicitGraphSource{path2()}, BoundedString::empty(h), 1));
  CHECK(member(prop, ExplicitGraphSource{path2()}, BoundedString(h, {0}), 1));
}

TEST_CASE("propagation requirement with an always-false base") {
  Order h = h333();
  BoundedString xi(h, {1});
  Requirement prop =
      propagation_requirement(always_false_req(), xi, 1, ExplicitGraphSource{path2()}, 1);
  CHECK_FALSE(member(prop, ExplicitGraphSource{path2()}, BoundedString(h, {0, 1}), 1));
}

TEST_CASE("propagation membership is extension closed") {
  SplitMix64 rng(419);
  Order h({2, 2, 2, 2, 2, 2});
  BoundedString xi(h, {0});
  Requirement w = w_requirement("W", random_functional(h, rng, 1));
  Requirement prop = propagation_requirement(w, xi, 1, BicliqueSource{{0}, {1}}, 1);
  for (int trial = 0; trial < 40; ++trial) {
    BoundedString tau = random_stem(h, rng, 2);
    PairSource src{BicliqueSource{{0}, {1}}};
    if (member(prop, src, tau, 1) && tau.size() < h.depth()) {
      CHECK(member(prop, src, tau.child(rng.below(2)), 1));
    }
  }
}

TEST_CASE("registration accepts lawful relations and rejects others") {
  Order h = h333();
  SplitMix64 rng(421);
  CHECK_NOTHROW(register_requirement(
      "le", [](const BoundedString& tau, const PairSet&) { return tau.size() >= 1; }, h, rng));

  SplitMix64 rng2(423);
  // not extension-closed: membership dies on longer strings
  CHECK_THROWS_AS(register_requirement(
                      "bad-ext",
                      [](const BoundedString& tau, const PairSet&) { return tau.size() == 1; },
                      h, rng2),
                  Error);

  SplitMix64 rng3(427);
  // not singleton-monotone: demands a real pair
  CHECK_THROWS_AS(register_requirement(
                      "bad-singleton",
                      [](const BoundedString&, const PairSet& f) {
                        for (const VertexPair& p : f) {
                          if (!p.degenerate()) return true;
                        }
                        return false;
                      },
                      h, rng3),
                  Error);
}
