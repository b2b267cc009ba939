#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trsched {

enum class ErrorKind {
    invalid_input,  // argument violates a documented precondition
    refused,        // request is well-formed but exceeds a configured limit
    inconsistent,   // a trace or file disagrees with the instance it claims to describe
    parse,          // malformed serialized input
    internal,       // a postcondition failed; indicates a bug
};

[[nodiscard]] constexpr const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::refused: return "refused";
        case ErrorKind::inconsistent: return "inconsistent";
        case ErrorKind::parse: return "parse";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

/// Library error. `field` is a JSON-pointer-like path for parse errors,
/// empty otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string field = {})
        : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    ErrorKind kind_;
    std::string field_;
};

}  // namespace trsched
