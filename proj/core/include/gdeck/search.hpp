#pragma once

// Exhaustive collision search. All 2^n strings of a length are enumerated
// depth-first (prefix DP states are shared between siblings), bucketed by a
// 128-bit hash of the relevant signature, and every hash collision is
// confirmed by recomputing the exact signatures. The reported witness is
// the lexicographically smallest confirmed pair; results do not depend on
// the worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdeck/deck.hpp"
#include "gdeck/strings.hpp"
#include "gdeck/wildcard.hpp"

namespace gdeck {

enum class DeckKind {
    full_b,      ///< whole signature, lengths 1..k
    exact_d,     ///< length-k slice only; strings with no k-subsequence are skipped
    eq7_star,    ///< plain, LR, L and R punctured signatures together
    wildcard_u,  ///< wildcard counts over a U family, strings over {X, Y}
};

[[nodiscard]] std::string_view to_string(DeckKind kind) noexcept;

struct SearchOptions {
    unsigned workers = 1;
    /// Witness pairs kept per length, smallest first.
    std::size_t max_witnesses = 8;
    /// Append-only progress log; lengths already certified clear in it are
    /// skipped on restart. Empty disables checkpointing.
    std::string checkpoint_path;
    /// Progress messages (never part of the report).
    std::function<void(const std::string&)> log;
};

/// Outcome of scanning a single length.
struct LengthScan {
    std::size_t n = 0;
    /// Smallest pairs, as text, in lexicographic order.
    std::vector<std::pair<std::string, std::string>> witnesses;
    /// Number of unordered confusable pairs at this length.
    std::uint64_t confusable_pairs = 0;
    /// Number of equivalence classes with two or more members.
    std::uint64_t classes = 0;
    /// Hash buckets that failed exact confirmation.
    std::uint64_t false_buckets = 0;

    [[nodiscard]] bool found() const noexcept { return confusable_pairs > 0; }
};

struct CollisionReport {
    DeckKind kind = DeckKind::full_b;
    /// (s, k) for deck kinds; unused for wildcard_u.
    int s = 0;
    int k = 0;
    /// U family for wildcard_u, e.g. "U(3,2)".
    std::string family;
    std::size_t scanned_from = 0;
    std::size_t scanned_to = 0;
    /// Minimal length with a confirmed collision, if any was found.
    std::optional<std::size_t> n;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::uint64_t confusable_pairs = 0;
    std::uint64_t classes = 0;
};

/// Largest length accepted by the enumeration engine.
inline constexpr std::size_t kMaxSearchLength = 26;

/// Scan one length. Throws OverflowError if exact counts could overflow.
[[nodiscard]] LengthScan scan_length(std::size_t n, const GapParams& params, DeckKind kind,
                                     const SearchOptions& options = {});

/// Smallest confirmed pair at length n, if any.
[[nodiscard]] std::optional<std::pair<BinaryString, BinaryString>> find_collision(
    std::size_t n, const GapParams& params, DeckKind kind, const SearchOptions& options = {});

/// First length at which a string has an s-gapped subsequence of length k,
/// s(k - 1) + 1. Below it the depth-k deck carries no more information than
/// a shallower one (for instance 01 and 10 share every 2-gapped deck).
[[nodiscard]] std::size_t first_nondegenerate_length(const GapParams& params) noexcept;

// For the three deck searches an n_min of 0 selects the default start:
// first_nondegenerate_length (and at least 2 for EQ7_STAR).
[[nodiscard]] CollisionReport search_G(const GapParams& params, std::size_t n_max,
                                       const SearchOptions& options = {}, std::size_t n_min = 0);
[[nodiscard]] CollisionReport search_G_star(const GapParams& params, std::size_t n_max,
                                            const SearchOptions& options = {}, std::size_t n_min = 0);
[[nodiscard]] CollisionReport search_exact_D(const GapParams& params, std::size_t n_max,
                                             const SearchOptions& options = {}, std::size_t n_min = 0);

[[nodiscard]] LengthScan scan_wildcard_length(std::size_t m, const USetSpec& spec,
                                              const SearchOptions& options = {});

/// Smallest m admitting distinct p, q in {X,Y}^m equivalent under `spec`.
[[nodiscard]] CollisionReport search_SU(const USetSpec& spec, std::size_t m_max,
                                        const SearchOptions& options = {}, std::size_t m_min = 1);

}  // namespace gdeck
