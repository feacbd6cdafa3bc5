#include "forcing_lab/finite_tree.hpp"

namespace forcing_lab {

namespace {

void validate_word(const Order& bound, const Word& w) {
  BoundedString checked(bound, w);  // reuse the bound checks
  (void)checked;
}

}  // namespace

FiniteTree::FiniteTree(Order bound, std::set<Word> nodes, Word stem)
    : bound_(std::move(bound)), nodes_(std::move(nodes)), stem_(std::move(stem)) {
  validate_word(bound_, stem_);
  if (nodes_.count(stem_) == 0) fail(ErrorCode::InvalidArgument, "stem must be a node");
  for (const Word& w : nodes_) {
    validate_word(bound_, w);
    if (!words_comparable(w, stem_)) {
      fail(ErrorCode::InvalidArgument, "node incomparable with the stem");
    }
    if (!w.empty()) {
      Word parent(w.begin(), w.end() - 1);
      if (nodes_.count(parent) == 0) {
        fail(ErrorCode::InvalidArgument, "node set is not prefix-closed");
      }
    }
  }
}

FiniteTree FiniteTree::from_words(Order bound, const std::vector<Word>& words, Word stem) {
  std::set<Word> closed;
  auto add_with_prefixes = [&closed](const Word& w) {
    for (size_t len = 0; len <= w.size(); ++len) closed.insert(Word(w.begin(), w.begin() + len));
  };
  add_with_prefixes(stem);
  for (const Word& w : words) add_with_prefixes(w);
  return FiniteTree(std::move(bound), std::move(closed), std::move(stem));
}

std::vector<Word> FiniteTree::leaves() const {
  std::vector<Word> result;
  for (const Word& w : nodes_) {
    if (child_count(w) == 0) result.push_back(w);
  }
  return result;
}

int FiniteTree::child_count(const Word& w) const {
  if (static_cast<int>(w.size()) >= bound_.depth()) return 0;
  int width = bound_.branching(static_cast<int>(w.size()));
  int count = 0;
  Word child = w;
  child.push_back(0);
  for (int a = 0; a < width; ++a) {
    child.back() = a;
    if (nodes_.count(child)) ++count;
  }
  return count;
}

FiniteTree subtree_at(const FiniteTree& t, const BoundedString& s) {
  if (!t.bound().same_table(s.bound())) {
    fail(ErrorCode::OrderMismatch, "subtree stem over a different order");
  }
  if (!t.contains(s.entries())) fail(ErrorCode::NotANode, "subtree stem is not a node");
  std::set<Word> kept;
  for (const Word& w : t.nodes()) {
    if (words_comparable(w, s.entries())) kept.insert(w);
  }
  return FiniteTree(t.bound(), std::move(kept), s.entries());
}

}  // namespace forcing_lab
