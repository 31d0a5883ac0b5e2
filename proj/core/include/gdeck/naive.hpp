#pragma once

// Brute-force reference implementations. Every function here walks index
// tuples directly and shares no code with the dynamic programs, so they
// serve as independent oracles for tests and for the `oracle` CLI command.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "gdeck/deck.hpp"
#include "gdeck/strings.hpp"

namespace gdeck::naive {

[[nodiscard]] std::uint64_t count_gapped(const BinaryString& w, const BinaryString& x, int s);

/// Exact signature built by enumerating every admissible index tuple.
[[nodiscard]] DeckSignature signature(const BinaryString& x, const GapParams& params);

/// Classical k-deck: multiset of all length-k subsequences (no gap rule).
[[nodiscard]] std::map<BinaryString, std::uint64_t> classical_deck(const BinaryString& x, int k);

[[nodiscard]] std::uint64_t count_wildcard(const WildcardString& w, const WildcardString& p);

enum class Relation { full, exact_slice, eq7 };

/// Lexicographically smallest pair (x < y) of length-n strings related
/// under `relation`, found by comparing every pair of naive signatures.
[[nodiscard]] std::optional<std::pair<BinaryString, BinaryString>> find_collision(
    std::size_t n, const GapParams& params, Relation relation);

}  // namespace gdeck::naive
