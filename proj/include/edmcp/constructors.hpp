#pragma once

#include "edmcp/factor.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace edmcp {

/// A construction reached a PSD or nonnegativity failure (e.g. the shift is too small).
class NotCertifiedError : public std::runtime_error {
public:
    NotCertifiedError(const std::string& what, Scalar value) : std::runtime_error(what), value_(std::move(value)) {}
    const Scalar& value() const { return value_; }

private:
    Scalar value_;
};

/// An identity that the optimal construction relies on did not hold.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct LrlPair {
    IntMatrix l;  // n x 3
    std::array<std::array<std::int64_t, 3>, 3> r{};
    /// L R L^T, exact.
    SymMatrix product() const;
};

/// The constant 3x3 middle factor [[0,1,1],[1,-6,1],[1,1,0]].
std::array<std::array<std::int64_t, 3>, 3> lrl_middle();

/// A_n = L R L^T with L the last three columns of (I - J)^{-3}, i.e.
/// L_{i,c} = C(k - i + 2, 2) for column index k = n - 3 + c >= i. n >= 3.
LrlPair lrl_factorize(int n);

/// One atom per positive off-diagonal pair plus diagonal surplus atoms.
/// Throws std::invalid_argument naming the first non-dominant row.
CpFactorization dd_factorize(const SymMatrix& a);

/// Realises the bipartite-with-null-vector structure: one atom per positive
/// entry of C, plus (lambda, e_i) for every i when lambda > 0.
CpFactorization bipartite_edge_factorize(const SymMatrix& a, std::size_t m, const Vector& w, const Scalar& lambda);

using ShiftFn = std::function<Scalar(int)>;

/// g(k) = q * f(k).
ShiftFn scaled_min_shift(Scalar q);

/// Arrow matrix [[(g(n) - g(n-1)) I, v], [v^T, g(n)]] with v = ((n-1)^2, ..., 1).
SymMatrix build_Rn(int n, const ShiftFn& g);
/// Factorizes a matrix that is diagonal apart from its last row/column.
CpFactorization arrow_factorize(const SymMatrix& r);

/// Double arrow with hubs at the first and last index.
SymMatrix build_Qn(int n, const ShiftFn& g);
CpFactorization double_arrow_factorize(const SymMatrix& q);

/// A_n + q f(n) I via the step-two recursion n -> n-2 with Q_n peeled off.
/// Requires q >= 1. Base cases n <= 5 reuse optimal_factorize.
CpFactorization inductive_factorize(int n, const Scalar& q);

struct OptimalPieces {
    int n = 0;
    int m = 0;
    std::vector<Atom> atoms_v;
    std::vector<Atom> atoms_vprime;
    std::optional<Atom> atom_t;
    std::vector<Atom> atoms_z;
    std::optional<Scalar> alpha;
    /// B_n minus all atoms above: [D C; C^T D'] (even) or with a middle alpha slot (odd).
    SymMatrix residual;

    /// The residual with the odd middle row/column removed.
    SymMatrix bipartite_block() const;
    /// The m x m off-diagonal block C (rows 1..m, columns after the middle).
    std::vector<std::vector<Scalar>> c_block() const;
    std::vector<Atom> all_atoms() const;
};

/// Even case n = 2m.
OptimalPieces optimal_even(int m);
/// Odd case n = 2m + 1, m >= 2.
OptimalPieces optimal_odd(int m);

/// Completely positive factorization of B_n = A_n + f(n) I for every n >= 2.
CpFactorization optimal_factorize(int n);

}  // namespace edmcp
