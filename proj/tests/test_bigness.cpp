#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcing_lab/bigness.hpp"
#include "forcing_lab/dnc.hpp"
#include "forcing_lab/harness.hpp"
#include "oracles.hpp"

using namespace forcing_lab;

namespace {

Order h333() { return Order({3, 3, 3}); }

StringSet up(const Order& h, std::set<Word> members) {
  return StringSet(Order(h), std::move(members), true);
}

}  // namespace

TEST_CASE("upward sets canonicalize to the minimal antichain") {
  Order h = h333();
  StringSet s = up(h, {{1}, {1, 0}, {2, 1}});
  CHECK(s.members() == std::set<Word>{{1}, {2, 1}});
  CHECK(s.contains({1, 2}));
  CHECK(s.contains({2, 1}));
  CHECK_FALSE(s.contains({2, 0}));
  CHECK_FALSE(s.contains({}));
}

TEST_CASE("full first level is 3-big above the root") {
  Order h = h333();
  StringSet b = up(h, {{0}, {1}, {2}});
  BigVerdict v = is_k_big(b, 3, BoundedString::empty(h), 3);
  REQUIRE(v.is_big());
  CHECK(v.witness().tree.nodes() == std::set<Word>{{}, {0}, {1}, {2}});
  CHECK(validate_witness(v.witness()));
}

TEST_CASE("a single marked child is 2-small") {
  Order h = h333();
  StringSet b = up(h, {{1}});
  BigVerdict v = is_k_big(b, 2, BoundedString::empty(h), 3);
  CHECK_FALSE(v.is_big());
}

TEST_CASE("invalid k is rejected") {
  Order h = h333();
  CHECK_THROWS_AS(is_k_big(up(h, {}), 0, BoundedString::empty(h), 3), Error);
  CHECK_THROWS_AS(is_k_big(up(h, {}), 2, BoundedString::empty(h), 4), Error);
}

TEST_CASE("diagonal bad set: small at two, big at one") {
  Order h = h333();
  MachineTable t(std::map<int, int>{{0, 1}});
  StringSet b = b_dnc(t, h);
  CHECK(b.members() == std::set<Word>{{1}});
  CHECK_FALSE(is_k_big(b, 2, BoundedString::empty(h), 3).is_big());
  CHECK(is_k_big(b, 1, BoundedString::empty(h), 3).is_big());
}

TEST_CASE("verdicts agree with explicit tree enumeration") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> table;
    int len = 1 + rng.below(3);
    int entry = 2 + rng.below(3);
    for (int i = 0; i < len; ++i) table.push_back(entry);
    Order h(std::move(table));
    StringSet b = rng.chance(1, 2) ? random_upward_set(h, rng) : random_explicit_set(h, rng);
    int k = 1 + rng.below(4);
    BoundedString stem = random_stem(h, rng, h.depth() - 1);
    BigVerdict fast = is_k_big(b, k, stem, h.depth());
    bool slow = oracles::exists_bushy_tree(b, k, stem, h.depth());
    CHECK(fast.is_big() == slow);
    if (fast.is_big()) CHECK(validate_witness(fast.witness()));
  }
}

TEST_CASE("horizon clamp never changes the verdict") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    Order h = random_order(rng, 4, 4);
    StringSet b = random_upward_set(h, rng);
    int k = 1 + rng.below(3);
    BoundedString stem = random_stem(h, rng, h.depth() - 1);
    int horizon = std::max(stem.size(), b.max_member_length());
    bool at_horizon = k_big_at_depth(b, k, stem, horizon);
    bool at_full = k_big_at_depth(b, k, stem, h.depth());
    CHECK(at_horizon == at_full);
    CHECK(at_full == is_k_big(b, k, stem, h.depth()).is_big());
  }
}

TEST_CASE("bigness is monotone in the set and antitone in k") {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    Order h = random_order(rng, 4, 4);
    StringSet b = random_upward_set(h, rng);
    StringSet wider = StringSet::unite(b, random_upward_set(h, rng));
    int k = 2 + rng.below(3);
    BoundedString stem = random_stem(h, rng, h.depth() - 1);
    if (is_k_big(b, k, stem, h.depth()).is_big()) {
      CHECK(is_k_big(wider, k, stem, h.depth()).is_big());
      CHECK(is_k_big(b, k - 1, stem, h.depth()).is_big());
    }
  }
}

TEST_CASE("closure of a two-branch set adds the root") {
  Order h33({3, 3});
  StringSet b = up(h33, {{0}, {1}});
  StringSet c = k_closure(b, 2, 2);
  CHECK(c.contains({}));
  CHECK(c.contains({0}));
  CHECK(c.contains({1, 1}));
  CHECK_FALSE(c.contains({2}));
  CHECK_FALSE(c.contains({2, 0}));
}

TEST_CASE("closure of the empty set is empty") {
  Order h = h333();
  StringSet c = k_closure(StringSet::empty_upward(h), 2, 3);
  CHECK(c.is_empty());
}

TEST_CASE("closure laws on random small sets") {
  SplitMix64 rng(109);
  for (int trial = 0; trial < 150; ++trial) {
    Order h = random_order(rng, 4, 4);
    StringSet b = rng.chance(1, 2) ? random_upward_set(h, rng) : random_explicit_set(h, rng);
    int k = 1 + rng.below(3);
    StringSet c = k_closure(b, k, h.depth());
    CHECK(b.subset_of(c, h.depth()));
    StringSet again = k_closure(c, k, h.depth());
    CHECK(again.same_contents(c, h.depth()));
    BoundedString stem = random_stem(h, rng, h.depth());
    if (!c.contains(stem.entries())) {
      CHECK_FALSE(is_k_big(b, k, stem, h.depth()).is_big());
    }
  }
}

TEST_CASE("union of empty parts") {
  Order h = h333();
  auto [merged, k] = union_small({{StringSet::empty_upward(h), 1}, {StringSet::empty_upward(h), 1}},
                                 BoundedString::empty(h), 3);
  CHECK(merged.is_empty());
  CHECK(k == 2);
}

TEST_CASE("two disjoint branches report 4-small") {
  Order h55({5, 5});
  StringSet b1 = up(h55, {{0}});
  StringSet b2 = up(h55, {{1}});
  auto [merged, k] =
      union_small({{b1, 2}, {b2, 2}}, BoundedString::empty(h55), 2);
  CHECK(k == 4);
  CHECK(merged.contains({0, 3}));
}

TEST_CASE("union_small rejects big parts") {
  Order h = h333();
  StringSet full = up(h, {{0}, {1}, {2}});
  CHECK_THROWS_AS(union_small({{full, 1}}, BoundedString::empty(h), 3), Error);
}

TEST_CASE("concatenation with full levels and with identity families") {
  Order h = h333();
  StringSet level_one = up(h, {{0}, {1}, {2}});
  auto child_family = [&h](const BoundedString& tau) {
    std::set<Word> words;
    for (const BoundedString& c : children(tau)) words.insert(c.entries());
    return StringSet(Order(h), std::move(words), true);
  };
  CHECK(verify_concatenation(level_one, child_family, 3, BoundedString::empty(h), 3));

  auto identity_family = [&h](const BoundedString& tau) {
    return StringSet(Order(h), {tau.entries()}, true);
  };
  CHECK(verify_concatenation(level_one, identity_family, 3, BoundedString::empty(h), 3));
}

TEST_CASE("witness extraction is deterministic and lexicographic") {
  Order h = h333();
  StringSet b = up(h, {{0}, {1}, {2}});
  BigVerdict v1 = is_k_big(b, 2, BoundedString::empty(h), 3);
  BigVerdict v2 = is_k_big(b, 2, BoundedString::empty(h), 3);
  REQUIRE(v1.is_big());
  CHECK(v1.witness().tree == v2.witness().tree);
  // two lexicographically least children
  CHECK(v1.witness().tree.nodes() == std::set<Word>{{}, {0}, {1}});
}
