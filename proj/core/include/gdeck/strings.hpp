#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdeck {

/// A finite string over {0,1}. Immutable once built.
class BinaryString {
public:
    BinaryString() = default;
    explicit BinaryString(std::vector<std::uint8_t> bits);

    /// Decode the low `length` bits of `code`, most significant bit first,
    /// so numeric order of codes equals lexicographic order of strings.
    static BinaryString from_code(std::uint64_t code, std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    /// Inverse of from_code. Requires size() <= 64.
    [[nodiscard]] std::uint64_t code() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const BinaryString&, const BinaryString&) = default;
    friend std::strong_ordering operator<=>(const BinaryString&, const BinaryString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

BinaryString operator+(const BinaryString& a, const BinaryString& b);

/// n copies of `bit`.
BinaryString repeat(std::uint8_t bit, std::size_t n);

/// Symbols of the pattern alphabet {X, Y} plus the wildcard J.
enum class Wild : std::uint8_t { X = 0, Y = 1, J = 2 };

class WildcardString {
public:
    WildcardString() = default;
    explicit WildcardString(std::vector<Wild> symbols);

    /// Decode a pattern over {X,Y} from a code, X=0 and Y=1, first symbol
    /// in the most significant position.
    static WildcardString from_code(std::uint64_t code, std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Wild operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] std::span<const Wild> symbols() const noexcept { return symbols_; }

    /// True when no symbol is J.
    [[nodiscard]] bool ground() const noexcept;
    [[nodiscard]] std::size_t fixed_count() const noexcept;
    [[nodiscard]] std::uint64_t code() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const WildcardString&, const WildcardString&) = default;
    friend std::strong_ordering operator<=>(const WildcardString&, const WildcardString&) = default;

private:
    std::vector<Wild> symbols_;
};

enum class Puncture : std::uint8_t { none, left, right, both };

[[nodiscard]] std::string_view to_string(Puncture p) noexcept;
/// Accepts "NONE", "L", "R", "LR" (case-insensitive).
[[nodiscard]] Puncture parse_puncture(std::string_view text);

[[nodiscard]] BinaryString parse_binary(std::string_view text);
[[nodiscard]] WildcardString parse_wildcard(std::string_view text);

[[nodiscard]] BinaryString complement(const BinaryString& x);
[[nodiscard]] BinaryString reverse(const BinaryString& x);
[[nodiscard]] BinaryString puncture(const BinaryString& x, Puncture spec);

}  // namespace gdeck
