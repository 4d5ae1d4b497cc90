#pragma once

#include "edmcp/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace edmcp {

enum class Parity { even, odd };

struct RegionFailure {
    int x = 0;
    int y = 0;
    std::string what;
};

/*
 * Independent check of the off-diagonal block C left over by the optimal
 * construction, indexed 1-based as C_{xy} (row x of the first block,
 * column y of the last block).
 *
 *  - S, the top-right block of V V^T, is summed from the atoms and compared
 *    entrywise with its three closed-form contributions S_I + S_II + S_III;
 *    S_III is compared against its floor-free majorant.
 *  - For x + y <= m + 1 each cell is classified into one of four regions and
 *    C is compared with H - (the region's S terms) and with the region's
 *    rational lower bound, whose numerator polynomial must be positive.
 *  - The even (m, 1) cell and the odd case's exceptional cells and lower-left
 *    corner are compared with their exact values.
 */
struct RegionReport {
    int m = 0;
    Parity parity = Parity::even;
    std::size_t cells = 0;
    /// cells per region, index 0 = outside the four regions (corner cells)
    std::array<std::size_t, 5> region_cells{};
    std::vector<RegionFailure> failures;

    bool passed() const { return failures.empty(); }
};

RegionReport region_oracle(int m, Parity parity);

/// Closed forms, 1-based; zero outside their index regions.
struct SContributions {
    Rational s1, s2, s3, s3_hat;
};
SContributions even_s_terms(int m, int x, int y);
SContributions odd_s_terms(int m, int x, int y);

/// Numerator and denominator of the four region lower bounds.
struct BoundValue {
    Rational numerator;
    Rational denominator;
    Rational value() const { return numerator / denominator; }
};
BoundValue even_region_bound(int region, long u, long v);
BoundValue odd_region_bound(int region, long u, long v);

}  // namespace edmcp
