#include "gdeck/constructions.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace gdeck {

std::string_view to_string(ClaimedProperty p) noexcept {
    switch (p) {
        case ClaimedProperty::classical_k_deck: return "CLASSICAL_K_DECK";
        case ClaimedProperty::eq7_full: return "EQ7_FULL";
        case ClaimedProperty::exact_deck_only: return "EXACT_DECK_ONLY";
        case ClaimedProperty::deck_equal: return "DECK_EQUAL";
    }
    return "UNKNOWN";
}

std::pair<BinaryString, BinaryString> concat_swap(const BinaryString& x, const BinaryString& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("concat_swap: lengths differ (" + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    }
    return {x + y, y + x};
}

ConstructionPair classical_mt(int k) {
    if (k < 1) throw std::invalid_argument("classical_mt: k must be >= 1");
    BinaryString x = parse_binary("01");
    BinaryString y = parse_binary("10");
    for (int level = 2; level <= k; ++level) std::tie(x, y) = concat_swap(x, y);
    return {x, y, GapParams(1, k), ClaimedProperty::classical_k_deck, false};
}

ConstructionPair s_padded_mt(int s, int k, bool trimmed) {
    if (s < 2) throw std::invalid_argument("s_padded_mt: s must be >= 2 (got " + std::to_string(s) + ")");
    if (k < 1) throw std::invalid_argument("s_padded_mt: k must be >= 1");
    const auto us = static_cast<std::size_t>(s);
    const BinaryString one = parse_binary("1");
    const BinaryString outer = repeat(0, us - 1);
    const BinaryString middle = repeat(0, us);
    BinaryString x = middle + one + outer;
    BinaryString y = outer + one + middle;
    for (int level = 2; level <= k; ++level) {
        BinaryString nx = outer + x + middle + y + outer;
        BinaryString ny = outer + y + middle + x + outer;
        x = std::move(nx);
        y = std::move(ny);
    }
    if (!trimmed) return {x, y, GapParams(s, k), ClaimedProperty::eq7_full, false};
    auto trim = [&](const BinaryString& z) {
        const auto cut = static_cast<std::ptrdiff_t>(us - 1);
        return BinaryString(std::vector<std::uint8_t>(z.bits().begin() + cut, z.bits().end() - cut));
    };
    return {trim(x), trim(y), GapParams(s, k), ClaimedProperty::deck_equal, true};
}

ConstructionPair padded_mt(int k) {
    if (k < 1) throw std::invalid_argument("padded_mt: k must be >= 1");
    BinaryString x = parse_binary("0010");
    BinaryString y = parse_binary("0100");
    const BinaryString z = parse_binary("0");
    const BinaryString zz = parse_binary("00");
    for (int level = 2; level <= k; ++level) {
        BinaryString nx = z + x + zz + y + z;
        BinaryString ny = z + y + zz + x + z;
        x = std::move(nx);
        y = std::move(ny);
    }
    return {x, y, GapParams(2, k), ClaimedProperty::eq7_full, false};
}

ConstructionPair padded_mt_trimmed(int k) {
    auto p = padded_mt(k);
    return {puncture(p.x, Puncture::both), puncture(p.y, Puncture::both), p.params, ClaimedProperty::deck_equal,
            true};
}

BinaryString exact_deck_family(const BinaryString& z, const BinaryString& fills, int s) {
    if (s < 1) throw std::invalid_argument("exact_deck_family: s must be >= 1");
    if (z.empty()) throw std::invalid_argument("exact_deck_family: z must be nonempty");
    const std::size_t per_slot = static_cast<std::size_t>(s) - 1;
    const std::size_t expected = (z.size() - 1) * per_slot;
    if (fills.size() != expected) {
        throw std::invalid_argument("exact_deck_family: expected " + std::to_string(expected) +
                                    " fill bits, got " + std::to_string(fills.size()));
    }
    std::vector<std::uint8_t> out;
    out.reserve(z.size() + fills.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.push_back(z[i]);
        if (i + 1 == z.size()) break;
        for (std::size_t j = 0; j < per_slot; ++j) out.push_back(fills[i * per_slot + j]);
    }
    return BinaryString(std::move(out));
}

}  // namespace gdeck
