#include "gdeck/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gdeck/binomial.hpp"
#include "gdeck/error.hpp"

namespace gdeck {

namespace {

std::uint64_t require(std::optional<std::uint64_t> v, const char* what) {
    if (!v) throw OverflowError(std::string(what) + ": value exceeds 64 bits");
    return *v;
}

std::uint64_t pow2(int e, const char* what) {
    if (e < 0 || e > 63) throw OverflowError(std::string(what) + ": value exceeds 64 bits");
    return std::uint64_t{1} << e;
}

}  // namespace

std::string_view to_string(FormulaId id) noexcept {
    switch (id) {
        case FormulaId::exact: return "EXACT";
        case FormulaId::padded: return "PADDED";
        case FormulaId::s_padded: return "S_PADDED";
        case FormulaId::dudik_su: return "DUDIK_SU";
        case FormulaId::kappa: return "KAPPA";
        case FormulaId::corollary_rec: return "COROLLARY_REC";
        case FormulaId::closed_form: return "CLOSED_FORM";
        case FormulaId::ungapped_reference: return "UNGAPPED_REFERENCE";
    }
    return "UNKNOWN";
}

std::uint64_t padded_star_bound(int k) {
    if (k < 1) throw std::invalid_argument("padded bound needs k >= 1");
    return require(checked_mul(4, pow2(k, "padded bound") - 1), "padded bound");
}

std::uint64_t padded_bound(int k) { return padded_star_bound(k) - 2; }

std::uint64_t s_padded_bound(int s, int k) {
    if (s < 2) throw std::invalid_argument("s-padded bound needs s >= 2");
    if (k < 1) throw std::invalid_argument("s-padded bound needs k >= 1");
    const auto us = static_cast<std::uint64_t>(s);
    const std::uint64_t head = require(checked_mul(5 * us - 2, pow2(k - 1, "s-padded bound")), "s-padded bound");
    // head >= 5s - 2, so head + 4 - 5s >= 2.
    return head + 4 - 5 * us;
}

std::uint64_t kappa(int k1, int k2) {
    if (k2 < 2 || k1 < k2) throw std::invalid_argument("kappa needs k1 >= k2 >= 2");
    const auto a = static_cast<std::uint64_t>(k1);
    const auto b = static_cast<std::uint64_t>(k2);
    const std::uint64_t first = require(checked_mul(a, a), "kappa");
    const std::uint64_t cube = require(checked_mul(require(checked_mul(b, b), "kappa"), b - 1), "kappa");
    return require(checked_add(first, cube / 2), "kappa");
}

std::uint64_t dudik_su_bound(int k1, int k2) {
    const double kap = static_cast<double>(kappa(k1, k2));
    const double v = kap * (std::log2(kap) + std::log2(std::log2(kap)) + 1.0);
    if (!(v < 1.8e19)) throw OverflowError("dudik_su_bound: value exceeds 64 bits");
    return static_cast<std::uint64_t>(std::floor(v));
}

std::uint64_t corollary_rec_bound(int K) {
    if (K < 1) throw std::invalid_argument("corollary bound needs K >= 1");
    std::optional<std::uint64_t> padded;
    if (K <= 62) padded = padded_star_bound(K);
    if (K <= 4) return *padded;
    const int k = K / 3;
    const int sigma = K % 3;
    if (k + sigma < 2) return *padded;  // U(2k+sigma, k+sigma) undefined
    std::optional<std::uint64_t> rec;
    try {
        const std::uint64_t inner = corollary_rec_bound(k);
        rec = checked_mul(require(checked_add(inner, 2), "corollary bound"), dudik_su_bound(2 * k + sigma, k + sigma));
    } catch (const OverflowError&) {
        rec.reset();
    }
    if (padded && rec) return std::min(*padded, *rec);
    if (padded) return *padded;
    if (rec) return *rec;
    throw OverflowError("corollary bound exceeds 64 bits");
}

double closed_form_value(int k) {
    if (k < 28) throw std::invalid_argument("closed-form bound holds for k >= 28; use padded_bound below that");
    const double kd = static_cast<double>(k);
    return 1.482 * std::pow(1.26, kd) * kd * kd * kd * (std::log(kd / 3.0) / std::log(3.0)) - 2.0;
}

std::uint64_t closed_form_bound(int k) {
    const double v = closed_form_value(k);
    if (!(v < 1.8e19)) throw OverflowError("closed_form_bound: value exceeds 64 bits");
    return static_cast<std::uint64_t>(std::ceil(v));
}

double ungapped_reference(int k) {
    if (k < 85) throw std::invalid_argument("ungapped reference bound holds for k >= 85");
    const double l = std::log(static_cast<double>(k)) / std::log(3.0);
    return 1.2 * std::tgamma(l) * std::pow(3.0, 1.5 * l * l - 0.5 * l);
}

BoundReport best_bound(int k) {
    if (k < 2) throw std::invalid_argument("best_bound needs k >= 2");
    BoundReport r;
    r.k = k;
    if (k <= 4) {
        static constexpr std::uint64_t kExact[] = {6, 13, 24};
        r.value = kExact[k - 2];
        r.formula = FormulaId::exact;
        r.rounding = "exact";
        r.note = "exhaustive search";
    } else if (k <= 27) {
        r.value = padded_star_bound(k);
        r.formula = FormulaId::padded;
        r.rounding = "exact";
        r.note = "summary table prints 4(2^k-1); the trimmed construction gives " +
                 std::to_string(padded_bound(k));
    } else {
        r.value = closed_form_bound(k);
        r.formula = FormulaId::closed_form;
        r.rounding = "ceil";
    }
    r.real_value = static_cast<double>(r.value);
    if (r.formula == FormulaId::closed_form) r.real_value = closed_form_value(k);
    return r;
}

std::vector<TableOneRow> table_one() {
    return {
        {2, 6, "010011", "001101", padded_bound(2), 4},
        {3, 13, "1101111010111", "1110101111011", padded_bound(3), 7},
        {4, 24, "110011010101001100110100", "110100110011010101001100", padded_bound(4), 12},
    };
}

std::vector<BoundReport> table_two() {
    std::vector<BoundReport> rows;
    for (int k = 28; k <= 33; ++k) rows.push_back(best_bound(k));
    return rows;
}

}  // namespace gdeck
