#include "forcing_lab/order.hpp"

namespace forcing_lab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotANode: return "NotANode";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AdditivityViolation: return "AdditivityViolation";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::FrozenViolation: return "FrozenViolation";
    case ErrorCode::EngineBug: return "EngineBug";
    case ErrorCode::RegistrationRejected: return "RegistrationRejected";
    case ErrorCode::SubsetBoundExceeded: return "SubsetBoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

Order::Order(std::vector<int> table) {
  if (table.empty()) fail(ErrorCode::InvalidArgument, "order table must not be empty");
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 2) {
      fail(ErrorCode::InvalidArgument, "order entries must be at least 2, got " +
                                           std::to_string(table[i]) + " at level " +
                                           std::to_string(i));
    }
    if (i + 1 < table.size() && table[i] > table[i + 1]) {
      fail(ErrorCode::InvalidArgument,
           "order table must be nondecreasing (level " + std::to_string(i) + ")");
    }
  }
  table_ = std::make_shared<const std::vector<int>>(std::move(table));
}

}  // namespace forcing_lab
