#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "gdeck/deck.hpp"
#include "gdeck/strings.hpp"

namespace gdeck {

enum class ClaimedProperty {
    classical_k_deck,  ///< equal classical (s = 1) k-decks
    eq7_full,          ///< plain, L, R and LR punctured decks all equal
    exact_deck_only,   ///< equal length-k slice only
    deck_equal,        ///< plain deck equality, nothing about punctures
};

[[nodiscard]] std::string_view to_string(ClaimedProperty p) noexcept;

struct ConstructionPair {
    BinaryString x;
    BinaryString y;
    GapParams params;
    ClaimedProperty claimed;
    bool trimmed = false;
};

/// (x, y) -> (xy, yx). Throws on length mismatch.
[[nodiscard]] std::pair<BinaryString, BinaryString> concat_swap(const BinaryString& x, const BinaryString& y);

/// Morse-Thue pair of length 2^k with equal classical k-decks.
[[nodiscard]] ConstructionPair classical_mt(int k);

/// Padded Morse-Thue pair of length 4(2^k - 1):
///   x1 = 0010, y1 = 0100,
///   x_k = 0 x_{k-1} 00 y_{k-1} 0,  y_k = 0 y_{k-1} 00 x_{k-1} 0.
[[nodiscard]] ConstructionPair padded_mt(int k);

/// padded_mt(k) with the outer padding bit removed from both ends.
[[nodiscard]] ConstructionPair padded_mt_trimmed(int k);

/// Generalisation to gap s >= 2: s-1 zeros outside, s zeros in the middle,
/// base pair 0^s 1 0^{s-1} / 0^{s-1} 1 0^s. With `trimmed`, s-1 zeros are
/// removed from each end.
[[nodiscard]] ConstructionPair s_padded_mt(int s, int k, bool trimmed = false);

/// z_1 f.. z_2 f.. ... z_k with s-1 fill bits between consecutive z
/// symbols. Every such string has exactly one s-gapped k-subsequence, z.
[[nodiscard]] BinaryString exact_deck_family(const BinaryString& z, const BinaryString& fills, int s = 2);

}  // namespace gdeck
