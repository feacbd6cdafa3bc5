#pragma once

#include <set>
#include <vector>

#include "forcing_lab/bounded_string.hpp"

namespace forcing_lab {

/// Prefix-closed finite set of bounded strings in which every node is
/// comparable with the stem (and the stem is a node).
class FiniteTree {
 public:
  FiniteTree(Order bound, std::set<Word> nodes, Word stem);

  /// Prefix closure of the given words, stem defaults to the empty string.
  static FiniteTree from_words(Order bound, const std::vector<Word>& words, Word stem = {});

  const Order& bound() const { return bound_; }
  const std::set<Word>& nodes() const { return nodes_; }
  const Word& stem() const { return stem_; }

  bool contains(const Word& w) const { return nodes_.count(w) != 0; }

  /// Nodes with no child in the tree.
  std::vector<Word> leaves() const;

  /// Children of w that are nodes.
  int child_count(const Word& w) const;

  bool operator==(const FiniteTree& other) const {
    return bound_.same_table(other.bound_) && nodes_ == other.nodes_ && stem_ == other.stem_;
  }

 private:
  Order bound_;
  std::set<Word> nodes_;
  Word stem_;
};

/// The subtree of nodes comparable with s, re-stemmed at s. s must be a node.
FiniteTree subtree_at(const FiniteTree& t, const BoundedString& s);

}  // namespace forcing_lab
