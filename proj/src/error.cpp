#include "tagsub/error.hpp"

namespace tagsub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::MultipleParents: return "MultipleParents";
    case ErrorCode::ConcreteParent: return "ConcreteParent";
    case ErrorCode::UnknownParent: return "UnknownParent";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotAValueType: return "NotAValueType";
    case ErrorCode::EmptyAbstract: return "EmptyAbstract";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace tagsub
