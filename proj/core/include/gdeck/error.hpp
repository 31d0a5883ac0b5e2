#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdeck {

/// Malformed textual input. `position` is 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when exact 64-bit counting cannot be guaranteed. Callers should
/// retry in fingerprint mode.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace gdeck
