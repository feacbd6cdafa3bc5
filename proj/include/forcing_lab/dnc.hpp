#pragma once

#include <map>
#include <optional>

#include "forcing_lab/bigness.hpp"
#include "forcing_lab/string_set.hpp"

namespace forcing_lab {

/// Finite model of the diagonal: e maps to the value the e-th machine
/// returns on its own index, absent entries model divergence.
class MachineTable {
 public:
  MachineTable() = default;
  explicit MachineTable(std::map<int, int> diag);

  const std::map<int, int>& diag() const { return diag_; }
  std::optional<int> value(int e) const {
    auto it = diag_.find(e);
    if (it == diag_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<int, int> diag_;
};

/// Finite model of an oracle functional: (prefix, input) -> output, with the
/// oracle context folded into the entries. Entries must be use-bounded
/// (input < |prefix|) and consistent along the prefix relation; violations
/// are rejected at construction.
class FunctionalTable {
 public:
  FunctionalTable() = default;
  explicit FunctionalTable(std::map<std::pair<Word, int>, int> entries);

  const std::map<std::pair<Word, int>, int>& entries() const { return entries_; }

  /// Inputs that may ever converge (for search pruning).
  int max_input() const { return max_input_; }

  /// Inputs mapped to 1 at exactly this prefix; lets searches accumulate the
  /// value-1 input set incrementally along a string.
  const std::map<Word, std::vector<int>>& ones_by_prefix() const { return ones_by_prefix_; }

 private:
  std::map<std::pair<Word, int>, int> entries_;
  std::map<Word, std::vector<int>> ones_by_prefix_;
  int max_input_ = -1;
};

/// Value at the shortest defined prefix of tau on input x, or nullopt when
/// every prefix diverges.
std::optional<int> eval_functional(const FunctionalTable& table, const BoundedString& tau, int x);
std::optional<int> eval_functional(const FunctionalTable& table, const Word& tau, int x);

/// The bad set of the diagonal: minimal elements are the strings that hit a
/// defined diagonal value at their last position and dodge every earlier
/// one. Table values at or above h(e) contribute nothing at level e.
StringSet b_dnc(const MachineTable& t, const Order& h);

/// Length-n string dodging every defined diagonal value, built by walking
/// the least child outside the 2-closure of b_dnc(t) at each level.
BoundedString build_dnc_string(const MachineTable& t, int n, const Order& h);

/// f(e) != t(e) for every defined e < |f|.
bool is_dnc(const BoundedString& f, const MachineTable& t);

}  // namespace forcing_lab
