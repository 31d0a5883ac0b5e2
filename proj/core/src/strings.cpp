#include "gdeck/strings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gdeck/error.hpp"

namespace gdeck {

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BinaryString: symbol outside {0,1}");
    }
}

BinaryString BinaryString::from_code(std::uint64_t code, std::size_t length) {
    if (length > 64) throw std::invalid_argument("BinaryString::from_code: length > 64");
    std::vector<std::uint8_t> bits(length);
    for (std::size_t i = 0; i < length; ++i) {
        bits[i] = static_cast<std::uint8_t>((code >> (length - 1 - i)) & 1u);
    }
    return BinaryString(std::move(bits));
}

std::uint64_t BinaryString::code() const {
    if (bits_.size() > 64) throw std::invalid_argument("BinaryString::code: length > 64");
    std::uint64_t c = 0;
    for (auto b : bits_) c = (c << 1) | b;
    return c;
}

std::string BinaryString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

BinaryString operator+(const BinaryString& a, const BinaryString& b) {
    std::vector<std::uint8_t> bits(a.bits().begin(), a.bits().end());
    bits.insert(bits.end(), b.bits().begin(), b.bits().end());
    return BinaryString(std::move(bits));
}

BinaryString repeat(std::uint8_t bit, std::size_t n) {
    return BinaryString(std::vector<std::uint8_t>(n, bit));
}

WildcardString::WildcardString(std::vector<Wild> symbols) : symbols_(std::move(symbols)) {
    for (auto w : symbols_) {
        if (w != Wild::X && w != Wild::Y && w != Wild::J) {
            throw std::invalid_argument("WildcardString: symbol outside {X,Y,J}");
        }
    }
}

WildcardString WildcardString::from_code(std::uint64_t code, std::size_t length) {
    if (length > 64) throw std::invalid_argument("WildcardString::from_code: length > 64");
    std::vector<Wild> s(length);
    for (std::size_t i = 0; i < length; ++i) {
        s[i] = ((code >> (length - 1 - i)) & 1u) ? Wild::Y : Wild::X;
    }
    return WildcardString(std::move(s));
}

bool WildcardString::ground() const noexcept {
    return std::none_of(symbols_.begin(), symbols_.end(), [](Wild w) { return w == Wild::J; });
}

std::size_t WildcardString::fixed_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](Wild w) { return w != Wild::J; }));
}

std::uint64_t WildcardString::code() const {
    if (!ground()) throw std::invalid_argument("WildcardString::code: pattern contains J");
    if (symbols_.size() > 64) throw std::invalid_argument("WildcardString::code: length > 64");
    std::uint64_t c = 0;
    for (auto w : symbols_) c = (c << 1) | (w == Wild::Y ? 1u : 0u);
    return c;
}

std::string WildcardString::str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (auto w : symbols_) s.push_back(w == Wild::X ? 'X' : w == Wild::Y ? 'Y' : 'J');
    return s;
}

std::string_view to_string(Puncture p) noexcept {
    switch (p) {
        case Puncture::none: return "NONE";
        case Puncture::left: return "L";
        case Puncture::right: return "R";
        case Puncture::both: return "LR";
    }
    return "NONE";
}

Puncture parse_puncture(std::string_view text) {
    std::string up(text);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "NONE" || up.empty()) return Puncture::none;
    if (up == "L") return Puncture::left;
    if (up == "R") return Puncture::right;
    if (up == "LR") return Puncture::both;
    throw std::invalid_argument("unknown puncture '" + std::string(text) + "' (expected NONE, L, R or LR)");
}

BinaryString parse_binary(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError("invalid binary symbol '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1),
                             i + 1);
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryString(std::move(bits));
}

WildcardString parse_wildcard(std::string_view text) {
    std::vector<Wild> s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'X': s.push_back(Wild::X); break;
            case 'Y': s.push_back(Wild::Y); break;
            case 'J': s.push_back(Wild::J); break;
            default:
                throw ParseError("invalid wildcard symbol '" + std::string(1, text[i]) +
                                     "' at position " + std::to_string(i + 1),
                                 i + 1);
        }
    }
    return WildcardString(std::move(s));
}

BinaryString complement(const BinaryString& x) {
    std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
    for (auto& b : bits) b ^= 1u;
    return BinaryString(std::move(bits));
}

BinaryString reverse(const BinaryString& x) {
    std::vector<std::uint8_t> bits(x.bits().rbegin(), x.bits().rend());
    return BinaryString(std::move(bits));
}

BinaryString puncture(const BinaryString& x, Puncture spec) {
    const std::size_t n = x.size();
    auto slice = [&](std::size_t lo, std::size_t hi) {
        return BinaryString(std::vector<std::uint8_t>(x.bits().begin() + static_cast<std::ptrdiff_t>(lo),
                                                      x.bits().begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    switch (spec) {
        case Puncture::none: return x;
        case Puncture::left:
            if (n < 1) throw std::invalid_argument("puncture L needs length >= 1");
            return slice(1, n);
        case Puncture::right:
            if (n < 1) throw std::invalid_argument("puncture R needs length >= 1");
            return slice(0, n - 1);
        case Puncture::both:
            if (n < 2) throw std::invalid_argument("puncture LR needs length >= 2");
            return slice(1, n - 1);
    }
    return x;
}

}  // namespace gdeck
