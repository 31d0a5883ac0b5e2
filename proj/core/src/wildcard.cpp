#include "gdeck/wildcard.hpp"

#include <stdexcept>

#include "gdeck/binomial.hpp"
#include "gdeck/error.hpp"

namespace gdeck {

USetSpec USetSpec::single(int r, int k) {
    if (r < 0 || k < r) {
        throw std::invalid_argument("U_r(k) needs 0 <= r <= k (got r=" + std::to_string(r) +
                                    ", k=" + std::to_string(k) + ")");
    }
    if (k > 30) throw std::invalid_argument("U_r(k): k too large to enumerate");
    return {Form::single, r, k};
}

USetSpec USetSpec::pair(int k1, int k2) {
    if (k2 < 2 || k1 < k2) {
        throw std::invalid_argument("U(k1,k2) needs k1 >= k2 >= 2 (got k1=" + std::to_string(k1) +
                                    ", k2=" + std::to_string(k2) + ")");
    }
    if (k1 > 30) throw std::invalid_argument("U(k1,k2): k1 too large to enumerate");
    return {Form::pair, k1, k2};
}

std::string USetSpec::str() const {
    if (form_ == Form::single) return "U_" + std::to_string(a_) + "(" + std::to_string(b_) + ")";
    return "U(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::uint64_t count_wildcard(const WildcardString& w, const WildcardString& p) {
    if (!p.ground()) throw std::invalid_argument("count_wildcard: text must not contain J");
    const std::size_t m = w.size();
    // f[j]: embeddings of w[0..j) into the prefix of p read so far.
    std::vector<std::uint64_t> f(m + 1, 0);
    f[0] = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = m; j >= 1; --j) {
            if (w[j - 1] == Wild::J || w[j - 1] == p[i]) {
                auto sum = checked_add(f[j], f[j - 1]);
                if (!sum) throw OverflowError("count_wildcard: count exceeds 64 bits");
                f[j] = *sum;
            }
        }
    }
    return f[m];
}

namespace {

void append_single(int r, int k, std::vector<WildcardString>& out) {
    for (int len = r; len <= k; ++len) {
        // Base-3 odometer over {X, Y, J}^len; keeps lexicographic order.
        std::vector<Wild> w(static_cast<std::size_t>(len), Wild::X);
        while (true) {
            WildcardString ws(w);
            if (ws.fixed_count() == static_cast<std::size_t>(r)) out.push_back(std::move(ws));
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == Wild::J) {
                w[static_cast<std::size_t>(pos)] = Wild::X;
                --pos;
            }
            if (pos < 0) break;
            auto& sym = w[static_cast<std::size_t>(pos)];
            sym = sym == Wild::X ? Wild::Y : Wild::J;
        }
    }
}

}  // namespace

std::vector<WildcardString> enumerate_U(const USetSpec& spec) {
    std::vector<WildcardString> out;
    if (spec.form() == USetSpec::Form::single) {
        append_single(spec.r(), spec.k(), out);
    } else {
        append_single(1, spec.k1(), out);
        append_single(2, spec.k2(), out);
    }
    return out;
}

std::vector<std::uint64_t> u_counts(const WildcardString& p, std::span<const WildcardString> family) {
    std::vector<std::uint64_t> counts;
    counts.reserve(family.size());
    for (const auto& w : family) counts.push_back(count_wildcard(w, p));
    return counts;
}

bool u_equiv(const WildcardString& p, const WildcardString& q, const USetSpec& spec) {
    if (!p.ground() || !q.ground()) throw std::invalid_argument("u_equiv: strings must not contain J");
    const auto family = enumerate_U(spec);
    for (const auto& w : family) {
        if (count_wildcard(w, p) != count_wildcard(w, q)) return false;
    }
    return true;
}

BinaryString pad_zero(const BinaryString& x) {
    const BinaryString zero = repeat(0, 1);
    return zero + x + zero;
}

BinaryString substitute(const WildcardString& p, const BinaryString& x, const BinaryString& y) {
    if (!p.ground()) throw std::invalid_argument("substitute: pattern must not contain J");
    const BinaryString x0 = pad_zero(x);
    const BinaryString y0 = pad_zero(y);
    std::vector<std::uint8_t> out;
    for (auto sym : p.symbols()) {
        const auto& block = sym == Wild::X ? x0 : y0;
        out.insert(out.end(), block.bits().begin(), block.bits().end());
    }
    return BinaryString(std::move(out));
}

Lemma3Report lemma3_check(const Lemma3Instance& inst) {
    if (inst.k < 1) throw std::invalid_argument("lemma3: k must be >= 1");
    if (inst.sigma < 0 || inst.sigma > 2) throw std::invalid_argument("lemma3: sigma must be 0, 1 or 2");
    if (inst.k + inst.sigma < 2) {
        throw std::invalid_argument("lemma3: k + sigma must be >= 2 so that U(2k+sigma, k+sigma) is defined");
    }
    if (inst.x.size() != inst.y.size()) throw std::invalid_argument("lemma3: x and y differ in length");
    if (inst.p.size() != inst.q.size()) throw std::invalid_argument("lemma3: p and q differ in length");
    if (!inst.p.ground() || !inst.q.ground()) throw std::invalid_argument("lemma3: p and q must not contain J");
    if (inst.p.empty()) throw std::invalid_argument("lemma3: p and q must be nonempty");

    const GapParams inner(2, inst.k);
    const GapParams outer(2, 3 * inst.k + inst.sigma);
    const auto spec = USetSpec::pair(2 * inst.k + inst.sigma, inst.k + inst.sigma);

    Lemma3Report r{verify_eq7(inst.x, inst.y, inner), false, false, Eq7Report{outer, CountMode::exact()}, {}, {}, false, false};
    r.pq_equivalent = u_equiv(inst.p, inst.q, spec);
    r.degenerate = inst.x == inst.y || inst.p == inst.q;
    r.ends_agree = inst.p[0] == inst.q[0] && inst.p[inst.p.size() - 1] == inst.q[inst.q.size() - 1];
    r.hp = substitute(inst.p, inst.x, inst.y);
    r.hq = substitute(inst.q, inst.x, inst.y);
    r.distinct = r.hp != r.hq;
    const CountMode mode = exact_mode_safe(r.hp.size(), outer) ? CountMode::exact() : CountMode::fingerprint_default();
    r.h_eq7 = verify_eq7(r.hp, r.hq, outer, mode);
    return r;
}

}  // namespace gdeck
