#include "gdeck/naive.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace gdeck::naive {

namespace {

// Calls visit(indices) for every tuple i_1 < ... < i_len (0-based) with
// consecutive differences >= s.
void for_each_tuple(std::size_t n, std::size_t len, std::size_t s,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (idx.size() == len) {
            visit(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + s);
            idx.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::uint64_t count_gapped(const BinaryString& w, const BinaryString& x, int s) {
    if (w.empty()) throw std::invalid_argument("naive::count_gapped: empty pattern");
    std::uint64_t total = 0;
    for_each_tuple(x.size(), w.size(), static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& idx) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (x[idx[j]] != w[j]) return;
        }
        ++total;
    });
    return total;
}

DeckSignature signature(const BinaryString& x, const GapParams& params) {
    std::vector<std::uint64_t> values(pattern_count(params.k()), 0);
    for (int len = 1; len <= params.k(); ++len) {
        for_each_tuple(x.size(), static_cast<std::size_t>(len), static_cast<std::size_t>(params.s()),
                       [&](const std::vector<std::size_t>& idx) {
                           std::uint64_t v = 0;
                           for (auto i : idx) v = (v << 1) | x[i];
                           ++values[pattern_index(len, v)];
                       });
    }
    return DeckSignature(params, CountMode::exact(), x.size(), std::move(values));
}

std::map<BinaryString, std::uint64_t> classical_deck(const BinaryString& x, int k) {
    std::map<BinaryString, std::uint64_t> deck;
    for_each_tuple(x.size(), static_cast<std::size_t>(k), 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::uint8_t> bits;
        for (auto i : idx) bits.push_back(x[i]);
        ++deck[BinaryString(std::move(bits))];
    });
    return deck;
}

std::uint64_t count_wildcard(const WildcardString& w, const WildcardString& p) {
    if (!p.ground()) throw std::invalid_argument("naive::count_wildcard: text contains J");
    std::uint64_t total = 0;
    for_each_tuple(p.size(), w.size(), 1, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (w[j] != Wild::J && w[j] != p[idx[j]]) return;
        }
        ++total;
    });
    return total;
}

std::optional<std::pair<BinaryString, BinaryString>> find_collision(std::size_t n, const GapParams& params,
                                                                    Relation relation) {
    if (n > 20) throw std::invalid_argument("naive::find_collision: n too large for pairwise search");
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::vector<std::uint64_t>> keys(total);
    std::vector<bool> usable(total, true);
    for (std::uint64_t c = 0; c < total; ++c) {
        auto x = BinaryString::from_code(c, n);
        auto append = [&](const BinaryString& z) {
            auto sig = naive::signature(z, params);
            keys[c].insert(keys[c].end(), sig.values().begin(), sig.values().end());
        };
        switch (relation) {
            case Relation::full: append(x); break;
            case Relation::exact_slice: {
                auto sig = naive::signature(x, params);
                auto sl = sig.slice(params.k());
                keys[c].assign(sl.begin(), sl.end());
                bool any = false;
                for (auto v : sl) any = any || v != 0;
                usable[c] = any;
                break;
            }
            case Relation::eq7:
                append(x);
                append(puncture(x, Puncture::both));
                append(puncture(x, Puncture::left));
                append(puncture(x, Puncture::right));
                break;
        }
    }
    for (std::uint64_t a = 0; a < total; ++a) {
        if (!usable[a]) continue;
        for (std::uint64_t b = a + 1; b < total; ++b) {
            if (usable[b] && keys[a] == keys[b]) {
                return std::make_pair(BinaryString::from_code(a, n), BinaryString::from_code(b, n));
            }
        }
    }
    return std::nullopt;
}

}  // namespace gdeck::naive
