#include "forcing_lab/bounded_string.hpp"

#include <algorithm>

namespace forcing_lab {

bool word_is_prefix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

bool words_comparable(const Word& a, const Word& b) {
  return word_is_prefix(a, b) || word_is_prefix(b, a);
}

BoundedString::BoundedString(Order bound, Word entries)
    : bound_(std::move(bound)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) > bound_.depth()) {
    fail(ErrorCode::DepthExceeded, "string of length " + std::to_string(entries_.size()) +
                                       " over order of length " + std::to_string(bound_.depth()));
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    int limit = bound_.branching(static_cast<int>(i));
    if (entries_[i] < 0 || entries_[i] >= limit) {
      fail(ErrorCode::InvalidArgument, "entry " + std::to_string(entries_[i]) + " at position " +
                                           std::to_string(i) + " exceeds bound " +
                                           std::to_string(limit));
    }
  }
}

BoundedString BoundedString::child(int value) const {
  Word next = entries_;
  next.push_back(value);
  return BoundedString(bound_, std::move(next));
}

BoundedString BoundedString::prefix(int length) const {
  return BoundedString(bound_, Word(entries_.begin(), entries_.begin() + length));
}

bool is_prefix(const BoundedString& a, const BoundedString& b) {
  if (!a.bound().same_table(b.bound())) {
    fail(ErrorCode::OrderMismatch, "prefix test across different orders");
  }
  return word_is_prefix(a.entries(), b.entries());
}

std::vector<BoundedString> children(const BoundedString& s) {
  int width = s.bound().branching(s.size());  // DepthExceeded when |s| = N
  std::vector<BoundedString> result;
  result.reserve(static_cast<size_t>(width));
  for (int a = 0; a < width; ++a) result.push_back(s.child(a));
  return result;
}

BoundedString join_context_first(const BoundedString& context, const BoundedString& s) {
  if (!context.bound().same_table(s.bound())) {
    fail(ErrorCode::OrderMismatch, "join across different orders");
  }
  Word joined;
  joined.reserve(static_cast<size_t>(context.size() + s.size()));
  int i = 0, j = 0;
  while (i < context.size() || j < s.size()) {
    if (i < context.size()) joined.push_back(context.at(i++));
    if (j < s.size()) joined.push_back(s.at(j++));
  }
  // Entries only move to later positions, so a nondecreasing bound still
  // accepts them; the joined length itself may exceed the table.
  return BoundedString(context.bound(), std::move(joined));
}

}  // namespace forcing_lab
