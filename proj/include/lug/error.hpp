#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lug {

enum class ErrorCode {
  Syntax,
  InvalidArgument,
  InvalidDiagram,
  IllegalMove,
  OutOfTurn,
  StaleVersion,
  NotFound,
  BoundExceeded,
  Inapplicable,
  ContractViolation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Character offset for syntax errors, move index for replay errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace lug
