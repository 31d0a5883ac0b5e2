#pragma once

// Gapped subsequence counting and deck signatures.
//
// A deck signature holds, for every nonempty binary pattern w with
// |w| <= k, the number of index tuples i_1 < ... < i_|w| into x with
// i_{j+1} >= i_j + s and x[i_j] = w_j. Patterns are ordered by length and
// then lexicographically; pattern (len, value) with value read most
// significant bit first sits at index (2^len - 2) + value.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdeck/strings.hpp"

namespace gdeck {

/// Minimum index gap s and deck depth k. s = 1 is the classical deck.
class GapParams {
public:
    GapParams(int s, int k);

    [[nodiscard]] int s() const noexcept { return s_; }
    [[nodiscard]] int k() const noexcept { return k_; }

    friend bool operator==(const GapParams&, const GapParams&) = default;

private:
    int s_;
    int k_;
};

/// Largest depth a signature may be built at.
inline constexpr int kMaxDepth = 24;

[[nodiscard]] constexpr std::size_t pattern_count(int k) noexcept {
    return (std::size_t{1} << (k + 1)) - 2;
}
[[nodiscard]] constexpr std::size_t pattern_index(int length, std::uint64_t value) noexcept {
    return ((std::size_t{1} << length) - 2) + static_cast<std::size_t>(value);
}
/// (length, value) for a pattern index.
[[nodiscard]] std::pair<int, std::uint64_t> pattern_at(std::size_t index) noexcept;
[[nodiscard]] BinaryString pattern_string(std::size_t index);

/// Three primes just below 2^62 used by default in fingerprint mode.
[[nodiscard]] std::span<const std::uint64_t> default_primes() noexcept;

/// Counting mode. An empty modulus list means exact 64-bit counts.
class CountMode {
public:
    static CountMode exact() { return CountMode{}; }
    static CountMode fingerprint(std::vector<std::uint64_t> primes);
    static CountMode fingerprint_default();

    [[nodiscard]] bool is_exact() const noexcept { return moduli_.empty(); }
    [[nodiscard]] std::span<const std::uint64_t> moduli() const noexcept { return moduli_; }
    [[nodiscard]] std::size_t lanes() const noexcept { return is_exact() ? 1 : moduli_.size(); }
    [[nodiscard]] std::string name() const { return is_exact() ? "EXACT" : "FINGERPRINT"; }

    friend bool operator==(const CountMode&, const CountMode&) = default;

private:
    std::vector<std::uint64_t> moduli_;
};

class DeckSignature {
public:
    DeckSignature(GapParams params, CountMode mode, std::size_t source_length,
                  std::vector<std::uint64_t> values);

    [[nodiscard]] const GapParams& params() const noexcept { return params_; }
    [[nodiscard]] const CountMode& mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t source_length() const noexcept { return source_length_; }
    [[nodiscard]] std::size_t patterns() const noexcept { return pattern_count(params_.k()); }
    [[nodiscard]] std::size_t lanes() const noexcept { return mode_.lanes(); }

    /// Count (or residue in `lane`) for the pattern at `index`.
    [[nodiscard]] std::uint64_t count(std::size_t index, std::size_t lane = 0) const {
        return values_[lane * patterns() + index];
    }
    [[nodiscard]] std::uint64_t count(const BinaryString& pattern, std::size_t lane = 0) const;

    /// Counts for all patterns of exactly `length` within one lane.
    [[nodiscard]] std::span<const std::uint64_t> slice(int length, std::size_t lane = 0) const;
    /// Lane-major storage: lane * patterns() + index.
    [[nodiscard]] std::span<const std::uint64_t> values() const noexcept { return values_; }

    /// Equality of the length-`length` slices in every lane.
    [[nodiscard]] bool slice_equal(const DeckSignature& other, int length) const;

    friend bool operator==(const DeckSignature& a, const DeckSignature& b) {
        return a.params_ == b.params_ && a.mode_ == b.mode_ && a.values_ == b.values_;
    }

private:
    GapParams params_;
    CountMode mode_;
    std::size_t source_length_;
    std::vector<std::uint64_t> values_;
};

/// Occurrences of `w` as an s-gapped subsequence of `x`. Throws on empty `w`
/// and OverflowError if the count exceeds 64 bits.
[[nodiscard]] std::uint64_t count_gapped(const BinaryString& w, const BinaryString& x, int s);

/// True when every count for a length-n string fits in 64 bits, judged by
/// the slice totals C(n - (l-1)(s-1), l).
[[nodiscard]] bool exact_mode_safe(std::size_t n, const GapParams& params);

/// Single left-to-right pass. Exact mode throws OverflowError up front when
/// the a-priori bound C(n - (l-1)(s-1), l) exceeds 64 bits for some l <= k.
[[nodiscard]] DeckSignature signature(const BinaryString& x, const GapParams& params,
                                      const CountMode& mode = CountMode::exact());

[[nodiscard]] DeckSignature punctured_signature(const BinaryString& x, const GapParams& params,
                                                Puncture spec,
                                                const CountMode& mode = CountMode::exact());

/// Reduce an exact signature modulo each prime.
[[nodiscard]] DeckSignature fingerprint(const DeckSignature& sig, std::span<const std::uint64_t> primes);

/// Full-deck equality under exact counts. Unequal lengths are compared
/// through their counts, not short-circuited.
[[nodiscard]] bool deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params);
/// Same relation under an explicit counting mode.
[[nodiscard]] bool deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params,
                              const CountMode& mode);

/// Equality of the length-k slices only.
[[nodiscard]] bool exact_deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params);

struct Eq7Report {
    GapParams params;
    CountMode mode;
    bool plain_equal = false;
    bool lr_equal = false;
    bool l_equal = false;
    bool r_equal = false;

    [[nodiscard]] bool all() const noexcept { return plain_equal && lr_equal && l_equal && r_equal; }
};

/// Deck equality of the whole strings and of their L, R and LR punctures.
/// Requires equal lengths >= 2.
[[nodiscard]] Eq7Report verify_eq7(const BinaryString& x, const BinaryString& y, const GapParams& params,
                                   const CountMode& mode = CountMode::exact());

/// As verify_eq7, but the L/R/LR punctures drop `depth` bits per end.
[[nodiscard]] Eq7Report verify_eq7_deep(const BinaryString& x, const BinaryString& y,
                                        const GapParams& params, std::size_t depth,
                                        const CountMode& mode = CountMode::exact());

struct DeckEntry {
    BinaryString pattern;
    std::uint64_t multiplicity;
};

/// Nonzero entries of the exact signature, by length then lexicographic.
/// Refuses (std::length_error) when 2^{k+1} - 2 > 10^6.
[[nodiscard]] std::vector<DeckEntry> enumerate_deck(const BinaryString& x, const GapParams& params);

}  // namespace gdeck
