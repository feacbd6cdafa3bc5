#include "forcing_lab/string_set.hpp"

#include <algorithm>

namespace forcing_lab {

StringSet::StringSet(Order bound, std::set<Word> members, bool upward_closed)
    : bound_(std::move(bound)), upward_(upward_closed) {
  for (const Word& w : members) {
    BoundedString checked(bound_, w);
    (void)checked;
  }
  if (!upward_) {
    members_ = std::move(members);
    return;
  }
  // Canonicalize to the minimal antichain: drop anything with a proper
  // prefix already present.
  for (const Word& w : members) {
    bool shadowed = false;
    for (size_t len = 0; len < w.size() && !shadowed; ++len) {
      if (members.count(Word(w.begin(), w.begin() + len))) shadowed = true;
    }
    if (!shadowed) members_.insert(w);
  }
}

bool StringSet::contains(const Word& w) const {
  if (!upward_) return members_.count(w) != 0;
  for (size_t len = 0; len <= w.size(); ++len) {
    if (members_.count(Word(w.begin(), w.begin() + len))) return true;
  }
  return false;
}

int StringSet::max_member_length() const {
  int longest = 0;
  for (const Word& w : members_) longest = std::max(longest, static_cast<int>(w.size()));
  return longest;
}

std::vector<Word> StringSet::enumerate(int depth) const {
  if (depth > bound_.depth()) {
    fail(ErrorCode::DepthExceeded, "enumeration past the order table");
  }
  std::vector<Word> result;
  if (!upward_) {
    for (const Word& w : members_) {
      if (static_cast<int>(w.size()) <= depth) result.push_back(w);
    }
    return result;
  }
  // Expand each antichain element to every extension within depth.
  for (const Word& base : members_) {
    if (static_cast<int>(base.size()) > depth) continue;
    std::vector<Word> frontier = {base};
    while (!frontier.empty()) {
      Word w = frontier.back();
      frontier.pop_back();
      result.push_back(w);
      if (static_cast<int>(w.size()) < depth) {
        int width = bound_.branching(static_cast<int>(w.size()));
        Word child = w;
        child.push_back(0);
        for (int a = 0; a < width; ++a) {
          child.back() = a;
          frontier.push_back(child);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

StringSet StringSet::unite(const StringSet& a, const StringSet& b) {
  if (!a.bound().same_table(b.bound())) {
    fail(ErrorCode::OrderMismatch, "union across different orders");
  }
  if (a.upward_ && b.upward_) {
    std::set<Word> merged = a.members_;
    merged.insert(b.members_.begin(), b.members_.end());
    return StringSet(a.bound_, std::move(merged), true);
  }
  int depth = a.bound().depth();
  std::set<Word> merged;
  for (const Word& w : a.enumerate(depth)) merged.insert(w);
  for (const Word& w : b.enumerate(depth)) merged.insert(w);
  return StringSet(a.bound_, std::move(merged), false);
}

bool StringSet::subset_of(const StringSet& other, int depth) const {
  for (const Word& w : enumerate(depth)) {
    if (!other.contains(w)) return false;
  }
  return true;
}

}  // namespace forcing_lab
