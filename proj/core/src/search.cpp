#include "gdeck/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "deck_kernel.hpp"
#include "gdeck/error.hpp"

namespace gdeck {

std::string_view to_string(DeckKind kind) noexcept {
    switch (kind) {
        case DeckKind::full_b: return "FULL_B";
        case DeckKind::exact_d: return "EXACT_D";
        case DeckKind::eq7_star: return "EQ7_STAR";
        case DeckKind::wildcard_u: return "WILDCARD_U";
    }
    return "UNKNOWN";
}

namespace {

// Ranges per length; fixed so that checkpoint records and merge order do
// not depend on the worker count.
constexpr unsigned kRangeBits = 6;

struct Entry {
    std::uint64_t h1;
    std::uint64_t h2;
    std::uint32_t code;
    bool used;
};

inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Two independent 64-bit chains.
struct Hash128 {
    std::uint64_t a = 0x243f6a8885a308d3ULL;
    std::uint64_t b = 0x13198a2e03707344ULL;

    void feed(std::uint64_t v) noexcept {
        a = mix64(a ^ v);
        b = mix64(b + v * 0xff51afd7ed558ccdULL + 0xc4ceb9fe1a85ec53ULL);
    }
    void feed(const std::uint64_t* p, std::size_t count) noexcept {
        for (std::size_t i = 0; i < count; ++i) feed(p[i]);
    }
};

class Scanner {
public:
    virtual ~Scanner() = default;
    /// Fill out[0 .. 2^(n - prefix_bits)) for all codes starting with `prefix`.
    virtual void scan(std::uint64_t prefix, unsigned prefix_bits, Entry* out) = 0;
    /// Non-hashed key used to confirm bucket collisions.
    [[nodiscard]] virtual std::vector<std::uint64_t> exact_key(std::uint64_t code) const = 0;
    [[nodiscard]] virtual std::string text(std::uint64_t code) const = 0;
};

class DeckScanner final : public Scanner {
public:
    DeckScanner(std::size_t n, GapParams params, DeckKind kind)
        : n_(n), params_(params), kind_(kind), k_(params.k()), s_(static_cast<std::size_t>(params.s())),
          P_(pattern_count(params.k())), full_((n + 1) * P_, 0),
          tail_(kind == DeckKind::eq7_star ? (n + 1) * P_ : 0, 0) {}

    void scan(std::uint64_t prefix, unsigned prefix_bits, Entry* out) override {
        std::uint64_t code = 0;
        for (unsigned i = 1; i <= prefix_bits; ++i) {
            const unsigned bit = static_cast<unsigned>((prefix >> (prefix_bits - i)) & 1u);
            push(i, bit);
            code = (code << 1) | bit;
        }
        lo_ = code << (n_ - prefix_bits);
        dfs(prefix_bits + 1, code, out);
    }

    [[nodiscard]] std::vector<std::uint64_t> exact_key(std::uint64_t code) const override {
        const auto x = BinaryString::from_code(code, n_);
        std::vector<std::uint64_t> key;
        auto append = [&](const BinaryString& z) {
            auto sig = signature(z, params_);
            key.insert(key.end(), sig.values().begin(), sig.values().end());
        };
        switch (kind_) {
            case DeckKind::full_b: append(x); break;
            case DeckKind::exact_d: {
                auto sig = signature(x, params_);
                auto sl = sig.slice(k_);
                key.assign(sl.begin(), sl.end());
                break;
            }
            case DeckKind::eq7_star:
                append(x);
                append(puncture(x, Puncture::both));
                append(puncture(x, Puncture::left));
                append(puncture(x, Puncture::right));
                break;
            case DeckKind::wildcard_u: break;
        }
        return key;
    }

    [[nodiscard]] std::string text(std::uint64_t code) const override {
        return BinaryString::from_code(code, n_).str();
    }

private:
    std::uint64_t* full(std::size_t d) { return full_.data() + d * P_; }
    std::uint64_t* tail(std::size_t d) { return tail_.data() + d * P_; }

    void push(std::size_t d, unsigned bit) {
        detail::extend(full(d - 1), d > s_ ? full(d - s_) : nullptr, full(d), bit, k_, detail::PlainAdd{});
        if (kind_ != DeckKind::eq7_star) return;
        // tail(d): deck of x_2..x_d, where x_d sits at position d - 1.
        if (d == 1) {
            std::fill_n(tail(1), P_, 0);
        } else {
            detail::extend(tail(d - 1), d - 1 > s_ ? tail(d - s_) : nullptr, tail(d), bit, k_,
                           detail::PlainAdd{});
        }
    }

    void dfs(std::size_t d, std::uint64_t code, Entry* out) {
        if (d > n_) {
            leaf(code, out[code - lo_]);
            return;
        }
        for (unsigned bit = 0; bit < 2; ++bit) {
            push(d, bit);
            dfs(d + 1, (code << 1) | bit, out);
        }
    }

    void leaf(std::uint64_t code, Entry& e) {
        Hash128 h;
        e.used = true;
        switch (kind_) {
            case DeckKind::full_b: h.feed(full(n_), P_); break;
            case DeckKind::exact_d: {
                const std::uint64_t* sl = full(n_) + pattern_index(k_, 0);
                const std::size_t width = std::size_t{1} << k_;
                e.used = std::any_of(sl, sl + width, [](std::uint64_t v) { return v != 0; });
                h.feed(sl, width);
                break;
            }
            case DeckKind::eq7_star:
                h.feed(full(n_), P_);
                h.feed(tail(n_ - 1), P_);
                h.feed(tail(n_), P_);
                h.feed(full(n_ - 1), P_);
                break;
            case DeckKind::wildcard_u: break;
        }
        e.h1 = h.a;
        e.h2 = h.b;
        e.code = static_cast<std::uint32_t>(code);
    }

    std::size_t n_;
    GapParams params_;
    DeckKind kind_;
    int k_;
    std::size_t s_;
    std::size_t P_;
    std::vector<std::uint64_t> full_;
    std::vector<std::uint64_t> tail_;
    std::uint64_t lo_ = 0;
};

class WildcardScanner final : public Scanner {
public:
    WildcardScanner(std::size_t m, std::vector<WildcardString> family) : m_(m), family_(std::move(family)) {}

    void scan(std::uint64_t prefix, unsigned prefix_bits, Entry* out) override {
        const std::uint64_t width = std::uint64_t{1} << (m_ - prefix_bits);
        const std::uint64_t lo = prefix << (m_ - prefix_bits);
        for (std::uint64_t i = 0; i < width; ++i) {
            const auto counts = exact_key(lo + i);
            Hash128 h;
            h.feed(counts.data(), counts.size());
            out[i] = Entry{h.a, h.b, static_cast<std::uint32_t>(lo + i), true};
        }
    }

    [[nodiscard]] std::vector<std::uint64_t> exact_key(std::uint64_t code) const override {
        return u_counts(WildcardString::from_code(code, m_), family_);
    }

    [[nodiscard]] std::string text(std::uint64_t code) const override {
        return WildcardString::from_code(code, m_).str();
    }

private:
    std::size_t m_;
    std::vector<WildcardString> family_;
};

class Checkpoint {
public:
    Checkpoint(std::string path, std::string tag) : path_(std::move(path)), tag_(std::move(tag)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        std::string line;
        const std::string head = tag_ + " n=";
        while (std::getline(in, line)) {
            if (line.rfind(head, 0) != 0) continue;
            std::istringstream fields(line.substr(head.size()));
            std::size_t n = 0;
            std::string status;
            if (fields >> n >> status && status == "clear") clear_.insert(n);
        }
    }

    [[nodiscard]] bool certified_clear(std::size_t n) const { return clear_.count(n) != 0; }

    void record(std::size_t n, const std::string& what) {
        if (path_.empty()) return;
        std::lock_guard lock(mu_);
        std::ofstream out(path_, std::ios::app);
        out << tag_ << " n=" << n << ' ' << what << '\n';
    }

private:
    std::string path_;
    std::string tag_;
    std::set<std::size_t> clear_;
    std::mutex mu_;
};

using ScannerFactory = std::function<std::unique_ptr<Scanner>()>;

LengthScan run_scan(std::size_t n, const ScannerFactory& make, const SearchOptions& options, Checkpoint* checkpoint) {
    if (n < 1 || n > kMaxSearchLength) {
        throw std::invalid_argument("search length must be in [1, " + std::to_string(kMaxSearchLength) + "]");
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned prefix_bits = static_cast<unsigned>(std::min<std::size_t>(n, kRangeBits));
    const std::uint64_t ranges = std::uint64_t{1} << prefix_bits;
    const std::uint64_t range_size = total >> prefix_bits;
    std::vector<Entry> entries(total);

    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        auto scanner = make();
        for (std::uint64_t r = next++; r < ranges; r = next++) {
            scanner->scan(r, prefix_bits, entries.data() + r * range_size);
            if (checkpoint) {
                checkpoint->record(n, "range=" + std::to_string(r * range_size) + "-" +
                                          std::to_string((r + 1) * range_size) + " done");
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(ranges)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    entries.erase(std::remove_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.used; }),
                  entries.end());
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.h1 != b.h1) return a.h1 < b.h1;
        if (a.h2 != b.h2) return a.h2 < b.h2;
        return a.code < b.code;
    });

    LengthScan result;
    result.n = n;
    const auto confirm = make();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].h1 == entries[i].h1 && entries[j].h2 == entries[i].h2) ++j;
        if (j - i >= 2) {
            std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> keyed;
            keyed.reserve(j - i);
            for (std::size_t t = i; t < j; ++t) keyed.emplace_back(confirm->exact_key(entries[t].code), entries[t].code);
            std::sort(keyed.begin(), keyed.end());
            bool split = false;
            for (std::size_t a = 0; a < keyed.size();) {
                std::size_t b = a + 1;
                while (b < keyed.size() && keyed[b].first == keyed[a].first) ++b;
                if (b - a >= 2) {
                    const std::uint64_t c = b - a;
                    ++result.classes;
                    result.confusable_pairs += c * (c - 1) / 2;
                    // keyed is sorted by (key, code) so codes in [a, b) ascend.
                    std::size_t taken = 0;
                    for (std::size_t u = a; u < b && taken < options.max_witnesses; ++u) {
                        for (std::size_t v = u + 1; v < b && taken < options.max_witnesses; ++v, ++taken) {
                            candidates.emplace_back(keyed[u].second, keyed[v].second);
                        }
                    }
                }
                if (b - a < keyed.size()) split = true;
                a = b;
            }
            if (split) ++result.false_buckets;
        }
        i = j;
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() > options.max_witnesses) candidates.resize(options.max_witnesses);
    for (auto [a, b] : candidates) result.witnesses.emplace_back(confirm->text(a), confirm->text(b));
    return result;
}

std::string deck_tag(DeckKind kind, const GapParams& params) {
    return std::string(to_string(kind)) + " s=" + std::to_string(params.s()) + " k=" + std::to_string(params.k());
}

ScannerFactory deck_factory(std::size_t n, const GapParams& params, DeckKind kind) {
    if (kind == DeckKind::wildcard_u) throw std::invalid_argument("use scan_wildcard_length for WILDCARD_U");
    if (kind == DeckKind::eq7_star && n < 2) throw std::invalid_argument("EQ7_STAR search needs n >= 2");
    if (!exact_mode_safe(n, params)) {
        throw OverflowError("exact counts may overflow at this length; confirm in fingerprint mode instead");
    }
    return [n, params, kind] { return std::make_unique<DeckScanner>(n, params, kind); };
}

template <class ScanFn>
CollisionReport run_search(CollisionReport report, std::size_t n_min, std::size_t n_max, const SearchOptions& options,
                           const std::string& tag, ScanFn scan) {
    if (n_min > n_max) throw std::invalid_argument("search range is empty (n_min > n_max)");
    Checkpoint checkpoint(options.checkpoint_path, tag);
    report.scanned_from = n_min;
    report.scanned_to = n_min;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        report.scanned_to = n;
        if (checkpoint.certified_clear(n)) {
            if (options.log) options.log(tag + " n=" + std::to_string(n) + " clear (from checkpoint)");
            continue;
        }
        LengthScan ls = scan(n, &checkpoint);
        checkpoint.record(n, ls.found() ? "collision" : "clear");
        if (options.log) {
            options.log(tag + " n=" + std::to_string(n) + (ls.found() ? " collision" : " clear") +
                        (ls.false_buckets ? " (hash buckets split: " + std::to_string(ls.false_buckets) + ")" : ""));
        }
        if (ls.found()) {
            report.n = n;
            report.witnesses = std::move(ls.witnesses);
            report.confusable_pairs = ls.confusable_pairs;
            report.classes = ls.classes;
            break;
        }
    }
    return report;
}

CollisionReport deck_search(DeckKind kind, const GapParams& params, std::size_t n_min, std::size_t n_max,
                            const SearchOptions& options) {
    CollisionReport report;
    report.kind = kind;
    report.s = params.s();
    report.k = params.k();
    const auto tag = deck_tag(kind, params);
    return run_search(std::move(report), n_min, n_max, options, tag, [&](std::size_t n, Checkpoint* cp) {
        return run_scan(n, deck_factory(n, params, kind), options, cp);
    });
}

}  // namespace

LengthScan scan_length(std::size_t n, const GapParams& params, DeckKind kind, const SearchOptions& options) {
    return run_scan(n, deck_factory(n, params, kind), options, nullptr);
}

std::optional<std::pair<BinaryString, BinaryString>> find_collision(std::size_t n, const GapParams& params,
                                                                    DeckKind kind, const SearchOptions& options) {
    SearchOptions one = options;
    one.max_witnesses = 1;
    auto ls = scan_length(n, params, kind, one);
    if (!ls.found()) return std::nullopt;
    return std::make_pair(parse_binary(ls.witnesses.front().first), parse_binary(ls.witnesses.front().second));
}

std::size_t first_nondegenerate_length(const GapParams& params) noexcept {
    return static_cast<std::size_t>(params.s()) * static_cast<std::size_t>(params.k() - 1) + 1;
}

CollisionReport search_G(const GapParams& params, std::size_t n_max, const SearchOptions& options,
                         std::size_t n_min) {
    if (n_min == 0) n_min = first_nondegenerate_length(params);
    return deck_search(DeckKind::full_b, params, n_min, n_max, options);
}

CollisionReport search_G_star(const GapParams& params, std::size_t n_max, const SearchOptions& options,
                              std::size_t n_min) {
    if (n_min == 0) n_min = first_nondegenerate_length(params);
    return deck_search(DeckKind::eq7_star, params, std::max<std::size_t>(n_min, 2), n_max, options);
}

CollisionReport search_exact_D(const GapParams& params, std::size_t n_max, const SearchOptions& options,
                               std::size_t n_min) {
    if (n_min == 0) n_min = first_nondegenerate_length(params);
    return deck_search(DeckKind::exact_d, params, n_min, n_max, options);
}

LengthScan scan_wildcard_length(std::size_t m, const USetSpec& spec, const SearchOptions& options) {
    auto family = enumerate_U(spec);
    return run_scan(m, [m, family] { return std::make_unique<WildcardScanner>(m, family); }, options, nullptr);
}

CollisionReport search_SU(const USetSpec& spec, std::size_t m_max, const SearchOptions& options, std::size_t m_min) {
    CollisionReport report;
    report.kind = DeckKind::wildcard_u;
    report.family = spec.str();
    const auto family = enumerate_U(spec);
    const std::string tag = "WILDCARD_U " + spec.str();
    return run_search(std::move(report), std::max<std::size_t>(m_min, 1), m_max, options, tag,
                      [&](std::size_t m, Checkpoint* cp) {
                          return run_scan(m, [m, &family] { return std::make_unique<WildcardScanner>(m, family); },
                                          options, cp);
                      });
}

}  // namespace gdeck
