#pragma once

// Exact tests around equimodular inverses of 0-1 matrices: the report on a
// single matrix, the necessary-condition battery, and the conjecture
// predicates (ends with NAA vs. inverse equimodular with constant
// diagonal). Everything is decided from integer cofactors; the rational
// inverse is never built on these paths.

#include <optional>
#include <string>
#include <vector>

#include "eprlab/epr.hpp"
#include "eprlab/exact.hpp"
#include "eprlab/graph.hpp"
#include "eprlab/matrix.hpp"
#include "eprlab/rules.hpp"

namespace eprlab {

struct EquimodularReport {
    bool nonsingular = false;
    bool equimodular = false;                  // all inverse entries share one modulus
    std::optional<Rational> alpha;             // that modulus, reported positive
    std::optional<bool> constant_diagonal;     // present iff nonsingular
};

/// Decides equimodularity of the inverse from the n^2 minors of order n-1:
/// they must share a single nonzero modulus. alpha is that modulus over
/// |det|. The diagonal of the inverse is constant iff the principal minors
/// of order n-1 are equal as integers.
inline EquimodularReport equimodular_report(const IntMatrix& m) {
    EquimodularReport rep;
    const BigInt d = det(m);
    if (d == 0) return rep;
    rep.nonsingular = true;

    const int n = m.order();
    BigInt modulus = -1;
    BigInt first_principal = 0;
    bool all_same_modulus = true;
    bool diag_equal = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BigInt v = deleted_minor(m, i, j);
            if (i == 1 && j == 1) first_principal = v;
            if (i == j && v != first_principal) diag_equal = false;
            if (v < 0) v = -v;
            if (modulus < 0)
                modulus = v;
            else if (v != modulus)
                all_same_modulus = false;
        }
    rep.constant_diagonal = diag_equal;
    if (all_same_modulus && modulus != 0) {
        rep.equimodular = true;
        rep.alpha = Rational(modulus, d < 0 ? BigInt(-d) : d);
    }
    return rep;
}

struct NaaTail {
    bool ends_naa = false;
    std::string tail; // the actual letters at orders n-2, n-1, n
};

/// Tail-only evaluation: computes the letters at orders n-2, n-1 and n and
/// reports whether they read NAA. No other order is touched.
inline NaaTail check_ends_naa(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("check_ends_naa: matrix is not symmetric");
    if (m.order() < 3)
        throw PreconditionError("check_ends_naa: order must be >= 3");
    NaaTail out;
    out.tail.push_back(letter_at_order(m, m.order() - 2));
    out.tail.push_back(letter_at_order(m, m.order() - 1));
    out.tail.push_back(det(m) != 0 ? 'A' : 'N');
    out.ends_naa = (out.tail == "NAA");
    return out;
}

// --- necessary-condition battery ----------------------------------------

enum class Verdict { Pass, Fail, NotApplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "NA";
    }
    return "NA";
}

namespace battery {
inline constexpr std::string_view kRowColParity = "ROW_COL_PARITY";
inline constexpr std::string_view kDetEven = "DET_EVEN";
inline constexpr std::string_view kAlphaReciprocalEven = "ALPHA_RECIPROCAL_EVEN";
inline constexpr std::string_view kMinorDividesDet = "MINOR_DIVIDES_DET";
inline constexpr std::string_view kPowerOfTwoProfile = "POWER_OF_TWO_PROFILE";
inline constexpr std::string_view kColumnDiffParity = "COLUMN_DIFF_PARITY";
inline constexpr std::string_view kRowDiffParity = "ROW_DIFF_PARITY";
inline constexpr std::string_view kDiagonalParity = "DIAGONAL_PARITY";
inline constexpr std::string_view kRankOneUpdateDiagonalParity =
    "RANK_ONE_UPDATE_DIAGONAL_PARITY";
inline constexpr std::string_view kPerfectSquareProducts = "PERFECT_SQUARE_PRODUCTS";
inline constexpr std::string_view kSchurPropagation = "SCHUR_PROPAGATION";

inline const std::vector<std::string_view>& all_conditions() {
    static const std::vector<std::string_view> order = {
        kRowColParity,        kDetEven,
        kAlphaReciprocalEven, kMinorDividesDet,
        kPowerOfTwoProfile,   kColumnDiffParity,
        kRowDiffParity,       kDiagonalParity,
        kRankOneUpdateDiagonalParity, kPerfectSquareProducts,
        kSchurPropagation,
    };
    return order;
}
} // namespace battery

struct ConditionResult {
    std::string condition;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

struct ConditionBattery {
    std::vector<ConditionResult> results;         // fixed documented order
    std::optional<std::pair<int, int>> power_profile; // (t, k) when |det| = 2^k

    const ConditionResult& get(std::string_view name) const {
        for (const auto& r : results)
            if (r.condition == name) return r;
        throw PreconditionError("unknown battery condition: " + std::string(name));
    }

    bool all_applicable_pass() const {
        for (const auto& r : results)
            if (r.verdict == Verdict::Fail) return false;
        return true;
    }
};

namespace detail {

/// Floor integer square root with exact verification by the caller.
inline BigInt isqrt_floor(const BigInt& v) {
    if (v < 0) throw PreconditionError("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    const BigInt r = isqrt_floor(v);
    return r * r == v;
}

inline bool is_power_of_two(const BigInt& v, int& exponent) {
    if (v <= 0) return false;
    BigInt x = v;
    int e = 0;
    while ((x & 1) == 0) {
        x >>= 1;
        ++e;
    }
    if (x != 1) return false;
    exponent = e;
    return true;
}

} // namespace detail

/// Evaluates every necessary condition for the inverse of a nonsingular
/// 0-1 matrix to be equimodular. When the matrix is singular, of order 1,
/// or its inverse is not equimodular, every verdict is not-applicable.
/// Conditions that require symmetry are not-applicable on non-symmetric
/// input. Throws on non-0-1 input.
inline ConditionBattery condition_battery(const IntMatrix& m) {
    if (!m.is_zero_one())
        throw PreconditionError("condition_battery: matrix is not 0-1");

    ConditionBattery bat;
    for (std::string_view name : battery::all_conditions())
        bat.results.push_back({std::string(name), Verdict::NotApplicable, ""});
    auto set = [&](std::string_view name, bool pass, std::string detail) {
        for (auto& r : bat.results)
            if (r.condition == name) {
                r.verdict = pass ? Verdict::Pass : Verdict::Fail;
                r.detail = std::move(detail);
                return;
            }
    };
    auto note = [&](std::string_view name, std::string detail) {
        for (auto& r : bat.results)
            if (r.condition == name) r.detail = std::move(detail);
    };

    const int n = m.order();
    const EquimodularReport rep = equimodular_report(m);
    if (n < 2 || !rep.nonsingular || !rep.equimodular) {
        note(battery::kRowColParity,
             "not applicable: matrix must be nonsingular of order >= 2 with "
             "equimodular inverse");
        return bat;
    }

    const bool symmetric = m.is_symmetric();
    const BigInt d = det(m);
    const BigInt abs_d = d < 0 ? BigInt(-d) : d;
    const Rational alpha = *rep.alpha;

    {
        bool ok = true;
        int bad = 0;
        for (int i = 1; i <= n && ok; ++i) {
            int row = 0, col = 0;
            for (int j = 1; j <= n; ++j) {
                row += m.at(i, j) != 0 ? 1 : 0;
                col += m.at(j, i) != 0 ? 1 : 0;
            }
            if (row % 2 != 0 || col % 2 != 0) {
                ok = false;
                bad = i;
            }
        }
        set(battery::kRowColParity, ok,
            ok ? "every row and column has an even number of nonzero entries"
               : "row/column " + std::to_string(bad) + " has an odd number of nonzero entries");
    }

    set(battery::kDetEven, abs_d % 2 == 0, "det = " + d.str());

    {
        // alpha = 1/(2m): the reciprocal of alpha must be an even integer
        const bool unit_num = alpha.num() == 1;
        const BigInt recip = alpha.den();
        const bool ok = unit_num && recip % 2 == 0;
        set(battery::kAlphaReciprocalEven, ok, "alpha = " + alpha.str());
    }

    {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j) {
                const BigInt mm = deleted_minor(m, i, j);
                if (mm == 0 || d % mm != 0) ok = false;
            }
        set(battery::kMinorDividesDet, ok,
            ok ? "every order-(n-1) minor divides det" : "an order-(n-1) minor does not divide det");
    }

    {
        int k = 0;
        if (detail::is_power_of_two(abs_d, k)) {
            const BigInt modulus = alpha.num() * abs_d / alpha.den();
            int t = 0;
            bool ok = detail::is_power_of_two(modulus, t);
            ok = ok && t >= 0 && t < k && alpha == Rational(BigInt(1), BigInt(1) << (k - t));
            bat.power_profile = std::make_pair(t, k);
            set(battery::kPowerOfTwoProfile, ok,
                "|det| = 2^" + std::to_string(k) + ", order-(n-1) minor modulus = 2^" +
                    std::to_string(t));
        } else {
            note(battery::kPowerOfTwoProfile, "|det| is not a power of two");
        }
    }

    {
        bool cols_ok = true, rows_ok = true;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int col_diff = 0, row_diff = 0;
                for (int r = 1; r <= n; ++r) {
                    col_diff += m.at(r, i) != m.at(r, j) ? 1 : 0;
                    row_diff += m.at(i, r) != m.at(j, r) ? 1 : 0;
                }
                if (col_diff % 2 != 0) cols_ok = false;
                if (row_diff % 2 != 0) rows_ok = false;
            }
        set(battery::kColumnDiffParity, cols_ok,
            "difference of any two columns has an even number of nonzero entries: " +
                std::string(cols_ok ? "yes" : "no"));
        set(battery::kRowDiffParity, rows_ok,
            "difference of any two rows has an even number of nonzero entries: " +
                std::string(rows_ok ? "yes" : "no"));
    }

    {
        int diag = 0;
        for (int i = 1; i <= n; ++i) diag += m.at(i, i) != 0 ? 1 : 0;
        if (symmetric)
            set(battery::kDiagonalParity, diag % 2 == 0,
                std::to_string(diag) + " nonzero diagonal entries");
        else
            note(battery::kDiagonalParity,
                 "not applicable to non-symmetric input; diagonal has " +
                     std::to_string(diag) + " nonzero entries");
    }

    {
        if (symmetric) {
            bool ok = true;
            int bad_k = 0, bad_count = 0;
            for (int k = 1; k <= n && ok; ++k) {
                int diag = 0;
                for (int i = 1; i <= n; ++i) {
                    const std::int64_t v = m.at(i, i) - m.at(i, k) * m.at(k, i);
                    diag += v != 0 ? 1 : 0;
                }
                if (diag % 2 != 0) {
                    ok = false;
                    bad_k = k;
                    bad_count = diag;
                }
            }
            set(battery::kRankOneUpdateDiagonalParity, ok,
                ok ? "every rank-one update keeps an even nonzero-diagonal count"
                   : "update by column " + std::to_string(bad_k) + " leaves " +
                         std::to_string(bad_count) + " nonzero diagonal entries");
        } else {
            note(battery::kRankOneUpdateDiagonalParity,
                 "not applicable to non-symmetric input");
        }
    }

    {
        if (symmetric && n >= 3 && check_ends_naa(m).ends_naa) {
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                const BigInt di = deleted_minor(m, i, i);
                for (int j = i + 1; j <= n && ok; ++j) {
                    const BigInt dj = deleted_minor(m, j, j);
                    const BigInt dij = deleted_minor(m, i, j);
                    if (di * dj != dij * dij) ok = false;
                }
            }
            set(battery::kPerfectSquareProducts, ok,
                ok ? "d_i * d_j equals d_ij^2 for all i, j"
                   : "a product of order-(n-1) principal minors is not the expected square");
        } else {
            note(battery::kPerfectSquareProducts,
                 symmetric ? "matrix does not end with NAA"
                           : "not applicable to non-symmetric input");
        }
    }

    {
        bool any_pivot = false;
        bool ok = true;
        std::string why;
        for (int i = 1; i <= n && ok; ++i) {
            if (m.at(i, i) == 0) continue;
            any_pivot = true;
            // pivot entry is 1, so the Schur complement is integral
            IntMatrix c(n - 1);
            int r = 0;
            for (int a = 1; a <= n; ++a) {
                if (a == i) continue;
                ++r;
                int s = 0;
                for (int b = 1; b <= n; ++b) {
                    if (b == i) continue;
                    ++s;
                    c.at(r, s) = m.at(a, b) - m.at(a, i) * m.at(i, b);
                }
            }
            const EquimodularReport crep = equimodular_report(c);
            if (!crep.equimodular || !(*crep.alpha == alpha)) {
                ok = false;
                why = "Schur complement by {" + std::to_string(i) +
                      "} lost equimodularity or changed alpha";
            }
        }
        if (!any_pivot)
            set(battery::kSchurPropagation, true,
                "vacuous: no nonsingular 1x1 pivot block");
        else
            set(battery::kSchurPropagation, ok,
                ok ? "every singleton Schur complement has an equimodular inverse with the same alpha"
                   : why);
    }

    return bat;
}

// --- conjecture predicates ------------------------------------------------

struct ConjectureVerdict {
    bool ends_naa = false;
    bool inverse_equimodular_constant_diagonal = false;
    bool agree = false;
    std::string tail;
};

/// Evaluates both sides of the equivalence independently on one matrix.
/// Requires a nonsingular symmetric 0-1 matrix of order >= 3.
inline ConjectureVerdict conjecture_verdict(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("conjecture_verdict: matrix is not symmetric");
    if (!m.is_zero_one())
        throw PreconditionError("conjecture_verdict: matrix is not 0-1");
    if (m.order() < 3)
        throw PreconditionError("conjecture_verdict: order must be >= 3");
    const EquimodularReport rep = equimodular_report(m);
    if (!rep.nonsingular)
        throw PreconditionError("conjecture_verdict: matrix is singular");
    ConjectureVerdict v;
    const NaaTail tail = check_ends_naa(m);
    v.ends_naa = tail.ends_naa;
    v.tail = tail.tail;
    v.inverse_equimodular_constant_diagonal =
        rep.equimodular && rep.constant_diagonal.value_or(false);
    v.agree = (v.ends_naa == v.inverse_equimodular_constant_diagonal);
    return v;
}

enum class TailClass { Nsnaa, Ssnaa, Violation };

inline const char* tail_class_name(TailClass c) {
    switch (c) {
        case TailClass::Nsnaa: return "NSNAA";
        case TailClass::Ssnaa: return "SSNAA";
        case TailClass::Violation: return "VIOLATION";
    }
    return "VIOLATION";
}

struct DichotomyResult {
    TailClass tail_class = TailClass::Violation;
    std::string tail5;  // letters at orders n-4 .. n
    std::string detail;
};

/// Classifies the five-letter tail of an NAA-ending symmetric 0-1 matrix of
/// order >= 5. A tail of NSNAA additionally requires odd order and a graph
/// that is structurally an odd cycle; anything else is reported as a
/// violation of the dichotomy.
inline DichotomyResult dichotomy_check(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("dichotomy_check: matrix is not symmetric");
    if (!m.is_zero_one())
        throw PreconditionError("dichotomy_check: matrix is not 0-1");
    const int n = m.order();
    if (n < 5) throw PreconditionError("dichotomy_check: order must be >= 5");
    const NaaTail tail = check_ends_naa(m);
    if (!tail.ends_naa)
        throw PreconditionError("dichotomy_check: matrix does not end with NAA");

    DichotomyResult out;
    out.tail5.push_back(letter_at_order(m, n - 4));
    out.tail5.push_back(letter_at_order(m, n - 3));
    out.tail5 += tail.tail;

    if (out.tail5 == "NSNAA") {
        if (n % 2 == 0) {
            out.detail = "tail NSNAA with even order";
            return out;
        }
        if (!m.has_zero_diagonal()) {
            out.detail = "tail NSNAA with a nonzero diagonal entry";
            return out;
        }
        if (!is_odd_cycle_structural(graph_of(m))) {
            out.detail = "tail NSNAA but the graph is not an odd cycle";
            return out;
        }
        out.tail_class = TailClass::Nsnaa;
        out.detail = "odd order, graph is an odd cycle";
    } else if (out.tail5 == "SSNAA") {
        out.tail_class = TailClass::Ssnaa;
    } else {
        out.detail = "tail " + out.tail5 + " is neither NSNAA nor SSNAA";
    }
    return out;
}

struct MainResultCheck {
    bool ends_naa = false;
    bool inverse_equimodular_constant_diagonal = false;
    bool equivalent = false;
    char letter_n_minus_4 = '?';
};

/// Checks the equivalence "ends with NAA <=> inverse equimodular with
/// constant diagonal" on one instance. Applicable only when the letter at
/// order n-4 is not S; that and the other preconditions are enforced.
inline MainResultCheck main_result_check(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("main_result_check: matrix is not symmetric");
    if (!m.is_zero_one())
        throw PreconditionError("main_result_check: matrix is not 0-1");
    const int n = m.order();
    if (n < 5) throw PreconditionError("main_result_check: order must be >= 5");
    const EquimodularReport rep = equimodular_report(m);
    if (!rep.nonsingular)
        throw PreconditionError("main_result_check: matrix is singular");

    MainResultCheck out;
    out.letter_n_minus_4 = letter_at_order(m, n - 4);
    if (out.letter_n_minus_4 == 'S')
        throw PreconditionError("main_result_check: letter n-4 is S");
    out.ends_naa = check_ends_naa(m).ends_naa;
    out.inverse_equimodular_constant_diagonal =
        rep.equimodular && rep.constant_diagonal.value_or(false);
    out.equivalent = (out.ends_naa == out.inverse_equimodular_constant_diagonal);
    return out;
}

} // namespace eprlab
