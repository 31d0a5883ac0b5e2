#include "gdeck/binomial.hpp"

namespace gdeck {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    // Running product C(n-r+i, i) stays integral at each step; the
    // intermediate is held in 128 bits and reduced by gcd-free division.
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace gdeck
