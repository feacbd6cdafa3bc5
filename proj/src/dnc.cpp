#include "forcing_lab/dnc.hpp"

#include <string>

namespace forcing_lab {

MachineTable::MachineTable(std::map<int, int> diag) : diag_(std::move(diag)) {
  for (const auto& [e, v] : diag_) {
    if (e < 0 || v < 0) fail(ErrorCode::InvalidArgument, "diagonal entries must be non-negative");
  }
}

FunctionalTable::FunctionalTable(std::map<std::pair<Word, int>, int> entries)
    : entries_(std::move(entries)) {
  for (const auto& [key, value] : entries_) {
    const auto& [prefix, input] = key;
    if (input < 0) fail(ErrorCode::InvalidArgument, "functional input must be non-negative");
    if (input >= static_cast<int>(prefix.size())) {
      fail(ErrorCode::ConsistencyViolation,
           "use violation: input " + std::to_string(input) + " with prefix of length " +
               std::to_string(prefix.size()));
    }
    max_input_ = std::max(max_input_, input);
    if (value == 1) ones_by_prefix_[prefix].push_back(input);
  }
  // Any two comparable prefixes defined on the same input must agree; it is
  // enough to compare each entry with its proper prefixes.
  for (const auto& [key, value] : entries_) {
    const auto& [prefix, input] = key;
    for (size_t len = 0; len < prefix.size(); ++len) {
      auto it = entries_.find({Word(prefix.begin(), prefix.begin() + len), input});
      if (it != entries_.end() && it->second != value) {
        fail(ErrorCode::ConsistencyViolation,
             "comparable prefixes disagree on input " + std::to_string(input));
      }
    }
  }
}

std::optional<int> eval_functional(const FunctionalTable& table, const Word& tau, int x) {
  // Shortest defined prefix wins; consistency makes the choice irrelevant.
  for (size_t len = 0; len <= tau.size(); ++len) {
    auto it = table.entries().find({Word(tau.begin(), tau.begin() + len), x});
    if (it != table.entries().end()) return it->second;
  }
  return std::nullopt;
}

std::optional<int> eval_functional(const FunctionalTable& table, const BoundedString& tau, int x) {
  return eval_functional(table, tau.entries(), x);
}

StringSet b_dnc(const MachineTable& t, const Order& h) {
  std::set<Word> antichain;
  // Minimal elements at level e+1: strings hitting t(e) at position e after
  // avoiding every earlier defined value.
  for (const auto& [e, bad_value] : t.diag()) {
    if (e >= h.depth()) {
      fail(ErrorCode::InvalidArgument,
           "diagonal index " + std::to_string(e) + " outside the working order");
    }
    if (bad_value >= h.branching(e)) continue;  // unreachable value at this level
    std::vector<Word> prefixes = {Word{}};
    for (int level = 0; level < e; ++level) {
      std::vector<Word> next;
      auto earlier = t.value(level);
      for (int a = 0; a < h.branching(level); ++a) {
        if (earlier && *earlier == a) continue;
        for (const Word& p : prefixes) {
          Word q = p;
          q.push_back(a);
          next.push_back(std::move(q));
        }
      }
      prefixes.swap(next);
    }
    for (const Word& p : prefixes) {
      Word full = p;
      full.push_back(bad_value);
      antichain.insert(std::move(full));
    }
  }
  return StringSet(Order(h), std::move(antichain), true);
}

BoundedString build_dnc_string(const MachineTable& t, int n, const Order& h) {
  if (n > h.depth()) {
    fail(ErrorCode::DepthExceeded, "requested length " + std::to_string(n) +
                                       " past order table of length " + std::to_string(h.depth()));
  }
  StringSet bad = b_dnc(t, h);
  StringSet closed = k_closure(bad, 2, bad.max_member_length());
  BoundedString f = BoundedString::empty(h);
  for (int level = 0; level < n; ++level) {
    bool extended = false;
    for (int a = 0; a < h.branching(level) && !extended; ++a) {
      BoundedString candidate = f.child(a);
      if (!closed.contains(candidate.entries())) {
        f = candidate;
        extended = true;
      }
    }
    if (!extended) {
      fail(ErrorCode::EngineBug, "every child of a small-above string landed in the closure");
    }
  }
  return f;
}

bool is_dnc(const BoundedString& f, const MachineTable& t) {
  for (int e = 0; e < f.size(); ++e) {
    auto value = t.value(e);
    if (value && f.at(e) == *value) return false;
  }
  return true;
}

}  // namespace forcing_lab
