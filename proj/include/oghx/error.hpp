#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oghx {

enum class ErrorCode {
    ArityMismatch,
    VertexOutOfRange,
    NotStrictlyIncreasing,
    DuplicateEdge,
    ArityTooSmall,
    NotCyclic,
    SyntaxError,
    IsolatedVertex,
    OrderKindMismatch,
    PatternTooLarge,
    PhaseOutOfRange,
    ParamOutOfRange,
    OutOfTheoremRange,
    EmptySizes,
    PreconditionViolated,
    OutOfMemory,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `line()` is set for errors that
/// originate in a parsed file.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<int> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<int> line_;
};

}  // namespace oghx
