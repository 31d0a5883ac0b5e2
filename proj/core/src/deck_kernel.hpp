#pragma once

// Inner loop shared by the single-pass signature builder and the
// enumeration search. Appending bit `bit` at position i turns the
// cumulative vector C_{i-1} into C_i: every occurrence ending at or before
// i - s (the `lag` vector, C_{i-s}) can be extended by the new symbol.

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace gdeck::detail {

struct PlainAdd {
    std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const noexcept { return a + b; }
};

struct ModAdd {
    std::uint64_t p;
    // Operands are already reduced and p < 2^63.
    std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t r = a + b;
        return r >= p ? r - p : r;
    }
};

/// `lag` may be null, meaning C_{i-s} is the zero vector.
template <class Add>
inline void extend(const std::uint64_t* prev, const std::uint64_t* lag, std::uint64_t* cur,
                   unsigned bit, int k, Add add) {
    const std::size_t total = (std::size_t{1} << (k + 1)) - 2;
    std::copy(prev, prev + total, cur);
    cur[bit] = add(cur[bit], 1);
    if (lag == nullptr) return;
    for (int len = 2; len <= k; ++len) {
        const std::size_t half = std::size_t{1} << (len - 1);
        const std::size_t base_prev = half - 2;
        const std::size_t base = (half << 1) - 2 + bit;
        for (std::size_t v = 0; v < half; ++v) {
            cur[base + 2 * v] = add(cur[base + 2 * v], lag[base_prev + v]);
        }
    }
}

}  // namespace gdeck::detail
