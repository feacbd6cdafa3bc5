#pragma once

#include <memory>
#include <vector>

#include "forcing_lab/error.hpp"

namespace forcing_lab {

/// Finite table of per-depth branching bounds. Entries are nondecreasing and
/// at least 2; asking for a level beyond the table is DepthExceeded, never an
/// extrapolation.
class Order {
 public:
  explicit Order(std::vector<int> table);

  int depth() const { return static_cast<int>(table_->size()); }

  int branching(int level) const {
    if (level < 0 || level >= depth()) {
      fail(ErrorCode::DepthExceeded,
           "no bound at level " + std::to_string(level) + " (table length " +
               std::to_string(depth()) + ")");
    }
    return (*table_)[static_cast<size_t>(level)];
  }

  const std::vector<int>& table() const { return *table_; }

  bool same_table(const Order& other) const {
    return table_ == other.table_ || *table_ == *other.table_;
  }

 private:
  std::shared_ptr<const std::vector<int>> table_;
};

}  // namespace forcing_lab
