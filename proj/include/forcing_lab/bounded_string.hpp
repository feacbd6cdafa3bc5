#pragma once

#include <string>
#include <vector>

#include "forcing_lab/order.hpp"

namespace forcing_lab {

/// Raw digit sequence; the bound lives outside.
using Word = std::vector<int>;

bool word_is_prefix(const Word& a, const Word& b);
bool words_comparable(const Word& a, const Word& b);

/// Finite string with entries[i] < h(i). The empty string is valid for any
/// order.
class BoundedString {
 public:
  BoundedString(Order bound, Word entries);

  static BoundedString empty(Order bound) { return BoundedString(std::move(bound), {}); }

  const Order& bound() const { return bound_; }
  const Word& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool is_empty() const { return entries_.empty(); }
  int at(int i) const { return entries_[static_cast<size_t>(i)]; }

  BoundedString child(int value) const;
  BoundedString prefix(int length) const;

  bool operator==(const BoundedString& other) const {
    return bound_.same_table(other.bound_) && entries_ == other.entries_;
  }

 private:
  Order bound_;
  Word entries_;
};

/// True iff a's entries are an initial segment of b's. Orders must agree.
bool is_prefix(const BoundedString& a, const BoundedString& b);

/// All one-step extensions of s, exactly h(|s|) of them.
std::vector<BoundedString> children(const BoundedString& s);

/// Interleaved join with the context's entries at even positions; used when a
/// string has to serve as the oracle part of a deeper evaluation.
BoundedString join_context_first(const BoundedString& context, const BoundedString& s);

}  // namespace forcing_lab
