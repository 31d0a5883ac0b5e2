#pragma once

// Closed-form and recursive upper bounds on the minimal confusable length.
// Integer formulas use checked 64-bit arithmetic; the two logarithmic
// formulas are evaluated in double precision and say how they were rounded.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gdeck {

enum class FormulaId {
    exact,               ///< value obtained by exhaustive search
    padded,              ///< 4(2^k - 1), with or without the trimmed -2
    s_padded,            ///< (5s - 2) 2^{k-1} - 5s + 4
    dudik_su,            ///< kappa (lg kappa + lg lg kappa + 1)
    kappa,               ///< k1^2 + k2^2 (k2 - 1) / 2
    corollary_rec,       ///< (G*(k) + 2) S_U(2k + sigma, k + sigma) recursion
    closed_form,         ///< 1.482 * 1.26^k * k^3 log_3(k/3) - 2
    ungapped_reference,  ///< 1.2 Gamma(log_3 k) 3^{(3/2) log_3^2 k - (1/2) log_3 k}
};

[[nodiscard]] std::string_view to_string(FormulaId id) noexcept;

struct BoundReport {
    int k = 0;
    int s = 0;   ///< 0 when not applicable
    int k1 = 0;  ///< 0 when not applicable
    int k2 = 0;
    /// Exact value for integer formulas; for ungapped_reference this is the
    /// rounded-up double, see `real_value`.
    std::uint64_t value = 0;
    double real_value = 0.0;
    FormulaId formula = FormulaId::padded;
    std::string rounding;  ///< "exact", "floor", "ceil"
    std::string note;
};

/// 4(2^k - 1) - 2.
[[nodiscard]] std::uint64_t padded_bound(int k);
/// 4(2^k - 1), the untrimmed construction length.
[[nodiscard]] std::uint64_t padded_star_bound(int k);
[[nodiscard]] std::uint64_t s_padded_bound(int s, int k);
[[nodiscard]] std::uint64_t kappa(int k1, int k2);
/// floor(kappa (lg kappa + lg lg kappa + 1)).
[[nodiscard]] std::uint64_t dudik_su_bound(int k1, int k2);
/// Bound on G*(K) from the base case 4(2^K - 1) for K <= 4 and the
/// canonical split K = 3k + sigma, k = floor(K/3), above it.
[[nodiscard]] std::uint64_t corollary_rec_bound(int K);
/// 1.482 * 1.26^k * k^3 * log_3(k/3) - 2, rounded up. Requires k >= 28.
[[nodiscard]] std::uint64_t closed_form_bound(int k);
[[nodiscard]] double closed_form_value(int k);
/// Ungapped reference value (double), k >= 85.
[[nodiscard]] double ungapped_reference(int k);

/// Summary-table bound for k >= 2.
[[nodiscard]] BoundReport best_bound(int k);

struct TableOneRow {
    int k;
    std::uint64_t exact;
    std::string x;
    std::string y;
    std::uint64_t padded_bound;
    std::uint64_t ungapped_exact;
};

/// Reference exact values and confusable pairs for k = 2, 3, 4.
[[nodiscard]] std::vector<TableOneRow> table_one();

/// (k, closed_form_bound(k)) for k = 28..33.
[[nodiscard]] std::vector<BoundReport> table_two();

}  // namespace gdeck
