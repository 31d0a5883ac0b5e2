#include "gdeck/deck.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "deck_kernel.hpp"
#include "gdeck/binomial.hpp"
#include "gdeck/error.hpp"

namespace gdeck {

namespace {

constexpr std::array<std::uint64_t, 3> kDefaultPrimes = {
    4611686018427387847ULL,  // 2^62 - 57
    4611686018427387817ULL,  // 2^62 - 87
    4611686018427387787ULL,  // 2^62 - 117
};

constexpr std::size_t kEnumerateLimit = 1'000'000;

}  // namespace

GapParams::GapParams(int s, int k) : s_(s), k_(k) {
    if (s < 1) throw std::invalid_argument("gap s must be >= 1, got " + std::to_string(s));
    if (k < 1) throw std::invalid_argument("depth k must be >= 1, got " + std::to_string(k));
    if (k > kMaxDepth) {
        throw std::invalid_argument("depth k must be <= " + std::to_string(kMaxDepth) + ", got " +
                                    std::to_string(k));
    }
}

std::pair<int, std::uint64_t> pattern_at(std::size_t index) noexcept {
    int len = 1;
    while (index >= pattern_index(len + 1, 0)) ++len;
    return {len, static_cast<std::uint64_t>(index - pattern_index(len, 0))};
}

BinaryString pattern_string(std::size_t index) {
    auto [len, value] = pattern_at(index);
    return BinaryString::from_code(value, static_cast<std::size_t>(len));
}

std::span<const std::uint64_t> default_primes() noexcept { return kDefaultPrimes; }

CountMode CountMode::fingerprint(std::vector<std::uint64_t> primes) {
    if (primes.empty()) throw std::invalid_argument("fingerprint mode needs at least one modulus");
    for (auto p : primes) {
        if (p < 2 || p >= (std::uint64_t{1} << 63)) {
            throw std::invalid_argument("fingerprint modulus must lie in [2, 2^63)");
        }
    }
    CountMode m;
    m.moduli_ = std::move(primes);
    return m;
}

CountMode CountMode::fingerprint_default() {
    return fingerprint({kDefaultPrimes.begin(), kDefaultPrimes.end()});
}

DeckSignature::DeckSignature(GapParams params, CountMode mode, std::size_t source_length,
                             std::vector<std::uint64_t> values)
    : params_(params), mode_(std::move(mode)), source_length_(source_length), values_(std::move(values)) {
    if (values_.size() != patterns() * lanes()) {
        throw std::invalid_argument("DeckSignature: value vector has wrong size");
    }
}

std::uint64_t DeckSignature::count(const BinaryString& pattern, std::size_t lane) const {
    if (pattern.empty() || pattern.size() > static_cast<std::size_t>(params_.k())) {
        throw std::invalid_argument("pattern length must be in [1, k]");
    }
    return count(pattern_index(static_cast<int>(pattern.size()), pattern.code()), lane);
}

std::span<const std::uint64_t> DeckSignature::slice(int length, std::size_t lane) const {
    if (length < 1 || length > params_.k()) throw std::invalid_argument("slice length must be in [1, k]");
    const std::size_t begin = lane * patterns() + pattern_index(length, 0);
    return std::span<const std::uint64_t>(values_).subspan(begin, std::size_t{1} << length);
}

bool DeckSignature::slice_equal(const DeckSignature& other, int length) const {
    if (!(params_ == other.params_) || !(mode_ == other.mode_)) return false;
    for (std::size_t lane = 0; lane < lanes(); ++lane) {
        auto a = slice(length, lane);
        auto b = other.slice(length, lane);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
    }
    return true;
}

std::uint64_t count_gapped(const BinaryString& w, const BinaryString& x, int s) {
    if (w.empty()) throw std::invalid_argument("count_gapped: pattern must be nonempty");
    if (s < 1) throw std::invalid_argument("count_gapped: gap s must be >= 1");
    const std::size_t m = w.size();
    const std::size_t ring = static_cast<std::size_t>(s) + 1;
    // rows[i % ring][j]: occurrences of w[0..j) ending at or before position i.
    std::vector<std::vector<std::uint64_t>> rows(ring, std::vector<std::uint64_t>(m + 1, 0));
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const auto& prev = rows[(i - 1) % ring];
        auto& cur = rows[i % ring];
        const std::vector<std::uint64_t>* lag =
            i > static_cast<std::size_t>(s) ? &rows[(i - static_cast<std::size_t>(s)) % ring] : nullptr;
        std::vector<std::uint64_t> next = prev;
        for (std::size_t j = 1; j <= m; ++j) {
            if (x[i - 1] != w[j - 1]) continue;
            std::uint64_t add = j == 1 ? 1 : (lag ? (*lag)[j - 1] : 0);
            auto sum = checked_add(next[j], add);
            if (!sum) throw OverflowError("count_gapped: count exceeds 64 bits");
            next[j] = *sum;
        }
        cur = std::move(next);
    }
    return rows[x.size() % ring][m];
}

bool exact_mode_safe(std::size_t n, const GapParams& params) {
    for (int len = 1; len <= params.k(); ++len) {
        const std::uint64_t shrink = static_cast<std::uint64_t>(len - 1) * static_cast<std::uint64_t>(params.s() - 1);
        if (n < shrink + static_cast<std::uint64_t>(len)) continue;
        if (!checked_binomial(n - shrink, static_cast<std::uint64_t>(len))) return false;
    }
    return true;
}

DeckSignature signature(const BinaryString& x, const GapParams& params, const CountMode& mode) {
    if (mode.is_exact() && !exact_mode_safe(x.size(), params)) {
        throw OverflowError("exact counts for length " + std::to_string(x.size()) + " at s=" +
                            std::to_string(params.s()) + ", k=" + std::to_string(params.k()) +
                            " may exceed 64 bits; use fingerprint mode");
    }
    const int k = params.k();
    const std::size_t s = static_cast<std::size_t>(params.s());
    const std::size_t P = pattern_count(k);
    const std::size_t lanes = mode.lanes();
    const std::size_t ring = s + 1;
    std::vector<std::uint64_t> buf(ring * lanes * P, 0);
    auto slot = [&](std::size_t pos, std::size_t lane) { return buf.data() + ((pos % ring) * lanes + lane) * P; };

    for (std::size_t i = 1; i <= x.size(); ++i) {
        const unsigned bit = x[i - 1];
        for (std::size_t lane = 0; lane < lanes; ++lane) {
            const std::uint64_t* lag = i > s ? slot(i - s, lane) : nullptr;
            if (mode.is_exact()) {
                detail::extend(slot(i - 1, lane), lag, slot(i, lane), bit, k, detail::PlainAdd{});
            } else {
                detail::extend(slot(i - 1, lane), lag, slot(i, lane), bit, k, detail::ModAdd{mode.moduli()[lane]});
            }
        }
    }
    std::vector<std::uint64_t> values(lanes * P);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
        std::copy_n(slot(x.size(), lane), P, values.begin() + static_cast<std::ptrdiff_t>(lane * P));
    }
    return DeckSignature(params, mode, x.size(), std::move(values));
}

DeckSignature punctured_signature(const BinaryString& x, const GapParams& params, Puncture spec,
                                  const CountMode& mode) {
    return signature(puncture(x, spec), params, mode);
}

DeckSignature fingerprint(const DeckSignature& sig, std::span<const std::uint64_t> primes) {
    if (!sig.mode().is_exact()) throw std::invalid_argument("fingerprint: signature is not in exact mode");
    CountMode mode = CountMode::fingerprint({primes.begin(), primes.end()});
    const std::size_t P = sig.patterns();
    std::vector<std::uint64_t> values(P * primes.size());
    for (std::size_t lane = 0; lane < primes.size(); ++lane) {
        for (std::size_t i = 0; i < P; ++i) values[lane * P + i] = sig.count(i) % primes[lane];
    }
    return DeckSignature(sig.params(), std::move(mode), sig.source_length(), std::move(values));
}

bool deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params) {
    return deck_equal(x, y, params, CountMode::exact());
}

bool deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params, const CountMode& mode) {
    return signature(x, params, mode) == signature(y, params, mode);
}

bool exact_deck_equal(const BinaryString& x, const BinaryString& y, const GapParams& params) {
    return signature(x, params).slice_equal(signature(y, params), params.k());
}

Eq7Report verify_eq7_deep(const BinaryString& x, const BinaryString& y, const GapParams& params,
                          std::size_t depth, const CountMode& mode) {
    if (x.size() != y.size()) throw std::invalid_argument("verify_eq7: strings differ in length");
    if (depth < 1) throw std::invalid_argument("verify_eq7: puncture depth must be >= 1");
    if (x.size() < 2 * depth) throw std::invalid_argument("verify_eq7: strings too short to puncture");
    auto cut = [&](const BinaryString& z, std::size_t lo, std::size_t hi) {
        return BinaryString(std::vector<std::uint8_t>(z.bits().begin() + static_cast<std::ptrdiff_t>(lo),
                                                      z.bits().end() - static_cast<std::ptrdiff_t>(hi)));
    };
    auto same = [&](std::size_t lo, std::size_t hi) {
        return signature(cut(x, lo, hi), params, mode) == signature(cut(y, lo, hi), params, mode);
    };
    Eq7Report r{params, mode};
    r.plain_equal = same(0, 0);
    r.lr_equal = same(depth, depth);
    r.l_equal = same(depth, 0);
    r.r_equal = same(0, depth);
    return r;
}

Eq7Report verify_eq7(const BinaryString& x, const BinaryString& y, const GapParams& params, const CountMode& mode) {
    return verify_eq7_deep(x, y, params, 1, mode);
}

std::vector<DeckEntry> enumerate_deck(const BinaryString& x, const GapParams& params) {
    if (pattern_count(params.k()) > kEnumerateLimit) {
        throw std::length_error("enumerate_deck: 2^(k+1)-2 patterns exceeds the 10^6 listing limit");
    }
    const auto sig = signature(x, params);
    std::vector<DeckEntry> out;
    for (std::size_t i = 0; i < sig.patterns(); ++i) {
        if (sig.count(i) != 0) out.push_back({pattern_string(i), sig.count(i)});
    }
    return out;
}

}  // namespace gdeck
