#pragma once

#include "edmcp/matrix.hpp"

#include <cstddef>
#include <vector>

namespace edmcp {

/*
 * Outcome of exact symmetric pivoted elimination.
 *
 * psd == true:  A = sum_k pivots[k] * columns[k] columns[k]^T with every pivot
 *               nonnegative. order[k] is the original index eliminated at step k
 *               (the remaining zero-pivot indices follow), so with P built from
 *               `order` and L from `columns` this is A = P L D L^T P^T.
 *               `kernel` is an exact basis of ker A.
 * psd == false: `witness` satisfies witness^T A witness < 0 exactly.
 */
struct PsdCertificate {
    bool psd = false;
    std::vector<std::size_t> order;
    std::vector<Scalar> pivots;
    std::vector<Vector> columns;
    std::size_t rank = 0;
    std::vector<Vector> kernel;
    Vector witness;

    SymMatrix reconstruct(std::size_t dim) const;
};

/// Exact PSD certification. No tolerance anywhere: the first positive
/// diagonal entry of the running Schur complement is used as pivot; a
/// negative diagonal entry, or a nonzero entry in an all-zero-diagonal block,
/// yields a witness.
PsdCertificate ldl_certify(const SymMatrix& a);

}  // namespace edmcp
