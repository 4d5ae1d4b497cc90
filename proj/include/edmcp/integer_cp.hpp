#pragma once

#include "edmcp/factor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace edmcp {

/// 0/1 matrix with (a, b) entry 1 iff a = b (mod i). 1 <= i <= n - 1.
SymMatrix build_Ei(int n, int i);

/// i integral atoms, the j-th supported on the positions congruent to j mod i.
CpFactorization ei_factor(int n, int i);

enum class WeightExpansion {
    /// a = s1^2 + ... + s4^2, atoms s_j * (block indicator)
    four_squares,
    /// a copies of the block indicator
    repetition,
};

/// Integral factorization of A_n + g_J(n) I = sum_i J_2(i) E_i.
CpFactorization jordan_sum_factorize(int n, WeightExpansion mode = WeightExpansion::four_squares);

struct TauSum {
    SymMatrix matrix;
    CpFactorization factorization;
};
/// E_1 + ... + E_{n-1} with the concatenated integral factors.
TauSum tau_sum_example(int n);

/// Number of divisors, the (1, 1+i) entry of the tau sum.
std::int64_t divisor_count(std::int64_t i);

struct SmallnCertificate {
    SymMatrix matrix;
    /// Compact form: rank-one blocks carry their integer multipliers as weights.
    CpFactorization weighted;
    /// Same certificate with multipliers expanded into weight-one integer atoms.
    CpFactorization integral;
};

/// Hand-built integer certificates for B_2..B_5 and B_6 + I_6 (n = 6).
SmallnCertificate smalln_certificate(int n);

/// Rewrites weighted atoms with integer weight and integer support into
/// weight-one atoms via sums of squares.
CpFactorization expand_to_integral(const CpFactorization& f);

struct SearchConfig {
    /// Upper bound on any column entry; defaults to floor(sqrt(max diagonal)).
    std::optional<std::int64_t> max_column_entry;
    std::uint64_t node_limit = 50'000'000;
    /// Integer vectors spanning (a subspace of) ker A; columns must be orthogonal to all of them.
    std::vector<std::vector<std::int64_t>> kernel;
    unsigned jobs = 1;
    /// With several jobs, return the certificate of the lowest root branch that succeeds.
    bool reproducible = true;
};

struct SearchOutcome {
    enum class Status { found, exhausted, limit };
    Status status = Status::exhausted;
    std::optional<CpFactorization> certificate;
    std::uint64_t nodes = 0;
};

const char* to_string(SearchOutcome::Status s);

/// Scales each rational kernel vector to a primitive integer vector.
std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<Vector>& kernel);

/*
 * Exhaustive search for an integer factorization A = U U^T, U >= 0.
 *
 * Each node takes the lexicographically first positive off-diagonal residual
 * entry (i, j) and branches over every integer column u with u_i, u_j >= 1,
 * u_a u_b <= R_ab, u_a^2 <= R_aa and u orthogonal to the kernel. While the
 * pivot stays the same, successive columns are taken in lexicographically
 * nonincreasing order: every column of a factorization that touches (i, j)
 * must be used before that entry reaches zero, so the order among them is
 * free. When no off-diagonal mass remains, the diagonal is finished with
 * e_a-supported columns, allowed only where every kernel vector vanishes.
 *
 * Throws std::invalid_argument if A is not an integer matrix.
 */
SearchOutcome integer_cp_search(const SymMatrix& a, const SearchConfig& cfg);

}  // namespace edmcp
