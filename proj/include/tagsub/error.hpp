#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tagsub {

enum class ErrorCode {
  CycleDetected,
  DuplicateName,
  MultipleParents,
  ConcreteParent,
  UnknownParent,
  UnknownName,
  NotAValueType,
  EmptyAbstract,
  InvalidTrace,
  UnknownFunction,
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

/// Every failure the library reports. `position` is a byte offset into the
/// parsed text for syntax-level errors, or a 1-based line number for file
/// loaders.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace tagsub
