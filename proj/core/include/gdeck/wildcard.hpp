#pragma once

// Wildcard pattern families over the alphabet {X, Y} and the substitution
// that turns a pattern into a binary string.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gdeck/deck.hpp"
#include "gdeck/strings.hpp"

namespace gdeck {

/// Either U_r(k): patterns of length r..k with exactly r non-J symbols,
/// or the union U_1(k1) u U_2(k2).
class USetSpec {
public:
    enum class Form { single, pair };

    static USetSpec single(int r, int k);
    static USetSpec pair(int k1, int k2);

    [[nodiscard]] Form form() const noexcept { return form_; }
    [[nodiscard]] int r() const noexcept { return a_; }
    [[nodiscard]] int k() const noexcept { return b_; }
    [[nodiscard]] int k1() const noexcept { return a_; }
    [[nodiscard]] int k2() const noexcept { return b_; }
    [[nodiscard]] std::string str() const;

private:
    USetSpec(Form form, int a, int b) : form_(form), a_(a), b_(b) {}
    Form form_;
    int a_;
    int b_;
};

/// Number of increasing index tuples into `p` matching `w`, with J matching
/// either letter. `p` must not contain J.
[[nodiscard]] std::uint64_t count_wildcard(const WildcardString& w, const WildcardString& p);

/// Members of the family, ordered by length then lexicographically with
/// X < Y < J.
[[nodiscard]] std::vector<WildcardString> enumerate_U(const USetSpec& spec);

/// count_wildcard(w, p) for every w in `family`, in order.
[[nodiscard]] std::vector<std::uint64_t> u_counts(const WildcardString& p, std::span<const WildcardString> family);

[[nodiscard]] bool u_equiv(const WildcardString& p, const WildcardString& q, const USetSpec& spec);

/// (0, x, 0).
[[nodiscard]] BinaryString pad_zero(const BinaryString& x);

/// Replace each X in `p` by pad_zero(x) and each Y by pad_zero(y).
[[nodiscard]] BinaryString substitute(const WildcardString& p, const BinaryString& x, const BinaryString& y);

struct Lemma3Instance {
    BinaryString x;
    BinaryString y;
    WildcardString p;
    WildcardString q;
    int k = 1;
    int sigma = 0;
};

struct Lemma3Report {
    // hypotheses
    Eq7Report xy_eq7;         ///< x, y under (s = 2, k)
    bool pq_equivalent = false;  ///< p ~ q under U(2k + sigma, k + sigma)
    // conclusions on h(p), h(q) under (s = 2, 3k + sigma)
    bool distinct = false;
    Eq7Report h_eq7;  ///< plain, LR, L and R punctures of the substituted strings
    BinaryString hp;
    BinaryString hq;
    bool degenerate = false;  ///< x == y or p == q
    /// p and q start with the same symbol and end with the same symbol.
    /// Diagnostic only; not part of the hypotheses.
    bool ends_agree = false;

    [[nodiscard]] bool hypotheses_hold() const noexcept { return xy_eq7.all() && pq_equivalent && !degenerate; }
    [[nodiscard]] bool conclusions_hold() const noexcept { return distinct && h_eq7.all(); }
};

/// Evaluate hypotheses and conclusions independently. Exact counting is
/// used when it is safe for the substituted length, otherwise the default
/// fingerprint primes; h_eq7.mode records which.
[[nodiscard]] Lemma3Report lemma3_check(const Lemma3Instance& inst);

}  // namespace gdeck
