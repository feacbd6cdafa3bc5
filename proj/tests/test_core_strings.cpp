#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcing_lab/finite_tree.hpp"
#include "forcing_lab/harness.hpp"
#include "forcing_lab/io.hpp"

using namespace forcing_lab;

namespace {

Order h333() { return Order({3, 3, 3}); }

}  // namespace

TEST_CASE("order validation") {
  CHECK_THROWS_AS(Order({}), Error);
  CHECK_THROWS_AS(Order({1, 2}), Error);
  CHECK_THROWS_AS(Order({3, 2}), Error);
  Order h({2, 3, 3});
  CHECK(h.depth() == 3);
  CHECK(h.branching(0) == 2);
  CHECK_THROWS_AS(h.branching(3), Error);
}

TEST_CASE("bounded strings respect the order") {
  Order h = h333();
  CHECK_NOTHROW(BoundedString(h, {2, 2, 2}));
  CHECK_THROWS_AS(BoundedString(h, {3}), Error);
  CHECK_THROWS_AS(BoundedString(h, {0, 0, 0, 0}), Error);
  BoundedString empty = BoundedString::empty(h);
  CHECK(empty.is_empty());
}

TEST_CASE("prefix relation") {
  Order h = h333();
  BoundedString eps = BoundedString::empty(h);
  BoundedString one_zero(h, {1, 0});
  CHECK(is_prefix(eps, one_zero));
  CHECK(is_prefix(BoundedString(h, {1}), one_zero));
  CHECK_FALSE(is_prefix(BoundedString(h, {0}), one_zero));
  Order other({4, 4});
  CHECK_THROWS_AS(is_prefix(BoundedString(other, {1}), one_zero), Error);
}

TEST_CASE("children enumerate one level") {
  Order h = h333();
  auto kids = children(BoundedString::empty(h));
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].entries() == Word{0});
  CHECK(kids[2].entries() == Word{2});

  auto deeper = children(BoundedString(h, {2}));
  REQUIRE(deeper.size() == 3);
  CHECK(deeper[1].entries() == Word{2, 1});

  CHECK_THROWS_AS(children(BoundedString(h, {0, 0, 0})), Error);
}

TEST_CASE("children count always matches the branching") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Order h = random_order(rng);
    BoundedString s = random_stem(h, rng, h.depth() - 1);
    auto kids = children(s);
    CHECK(static_cast<int>(kids.size()) == h.branching(s.size()));
    for (const auto& kid : kids) {
      CHECK(kid.size() == s.size() + 1);
      CHECK(is_prefix(s, kid));
    }
  }
}

TEST_CASE("finite tree invariants") {
  Order h = h333();
  // not prefix-closed
  CHECK_THROWS_AS(FiniteTree(h, {{Word{1, 0}}, {Word{}}}, Word{}), Error);
  // stem must be a node
  CHECK_THROWS_AS(FiniteTree(h, {Word{}}, Word{1}), Error);
  FiniteTree t = FiniteTree::from_words(h, {{0, 0}, {0, 1}}, {0});
  CHECK(t.nodes().size() == 4);
  CHECK(t.leaves().size() == 2);
}

TEST_CASE("subtree at a node") {
  Order h2({2});
  FiniteTree full = FiniteTree::from_words(h2, {{0}, {1}});
  FiniteTree sub = subtree_at(full, BoundedString(h2, {0}));
  CHECK(sub.nodes() == std::set<Word>{{}, {0}});
  CHECK(sub.stem() == Word{0});

  Order h = h333();
  FiniteTree t = FiniteTree::from_words(h, {{1, 0}, {1, 2}, {2}});
  CHECK(subtree_at(t, BoundedString::empty(h)) == t);
  CHECK_THROWS_AS(subtree_at(t, BoundedString(h, {0, 1})), Error);
}

TEST_CASE("subtree keeps the invariants on random trees") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Order h = random_order(rng);
    BoundedString stem = random_stem(h, rng, h.depth() - 1);
    FiniteTree t = random_bushy_tree(h, rng, 1, stem);
    std::vector<Word> nodes(t.nodes().begin(), t.nodes().end());
    Word pick = nodes[static_cast<size_t>(rng.below(static_cast<int>(nodes.size())))];
    if (!word_is_prefix(stem.entries(), pick)) continue;  // only re-stem below the stem
    FiniteTree sub = subtree_at(t, BoundedString(h, pick));
    CHECK(sub.stem() == pick);
    for (const Word& w : sub.nodes()) {
      CHECK(words_comparable(w, pick));
      if (!w.empty()) {
        CHECK(sub.contains(Word(w.begin(), w.end() - 1)));
      }
    }
  }
}

TEST_CASE("text formats round-trip byte for byte") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    Order h = random_order(rng);
    std::string order_text = serialize_order(h);
    CHECK(serialize_order(parse_order(order_text)) == order_text);

    BoundedString s = random_stem(h, rng, h.depth());
    std::string str_text = serialize_string(s);
    CHECK(serialize_string(parse_string(str_text, h)) == str_text);

    FiniteTree t = random_bushy_tree(h, rng, 1, random_stem(h, rng, h.depth() - 1));
    std::string tree_text = serialize_tree(t);
    CHECK(serialize_tree(parse_tree(tree_text, h)) == tree_text);
  }
}

TEST_CASE("epsilon serializes as a dash") {
  Order h = h333();
  CHECK(serialize_string(BoundedString::empty(h)) == "str -\n");
  CHECK(parse_string("str -", h).is_empty());
}
