#pragma once

#include <set>
#include <vector>

#include "forcing_lab/bounded_string.hpp"

namespace forcing_lab {

/// Finite set of bounded strings. Upward-closed sets store only the minimal
/// antichain and answer membership by "extends some stored element"; plain
/// sets store their members verbatim.
class StringSet {
 public:
  StringSet(Order bound, std::set<Word> members, bool upward_closed);

  static StringSet empty_upward(Order bound) { return StringSet(std::move(bound), {}, true); }
  static StringSet empty_explicit(Order bound) { return StringSet(std::move(bound), {}, false); }

  const Order& bound() const { return bound_; }
  bool upward_closed() const { return upward_; }
  const std::set<Word>& members() const { return members_; }
  bool is_empty() const { return members_.empty(); }

  bool contains(const Word& w) const;

  /// Length of the longest stored word (0 when empty). For upward-closed sets
  /// membership at or beyond this horizon is decided by the antichain alone.
  int max_member_length() const;

  /// All members of length <= depth, explicitly.
  std::vector<Word> enumerate(int depth) const;

  /// Union preserving the upward representation when both sides have it.
  static StringSet unite(const StringSet& a, const StringSet& b);

  /// True iff every member of this set (as a set of strings up to `depth`)
  /// belongs to `other`.
  bool subset_of(const StringSet& other, int depth) const;

  bool same_contents(const StringSet& other, int depth) const {
    return subset_of(other, depth) && other.subset_of(*this, depth);
  }

 private:
  Order bound_;
  bool upward_;
  std::set<Word> members_;
};

}  // namespace forcing_lab
