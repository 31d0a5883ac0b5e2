#pragma once

#include <cstdint>
#include <optional>

namespace gdeck {

/// C(n, r), or nullopt when the value does not fit in 64 bits.
/// Returns 0 for r > n.
[[nodiscard]] std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t r);

/// a + b, or nullopt on unsigned overflow.
[[nodiscard]] inline std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
    return r;
}

[[nodiscard]] inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

}  // namespace gdeck
