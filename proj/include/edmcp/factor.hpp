#pragma once

#include "edmcp/ldl.hpp"
#include "edmcp/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace edmcp {

/// Weighted rank-one certificate: contributes weight * support * support^T.
/// The numeric CP column is sqrt(weight) * support, which may leave the
/// scalar field; the Gram contribution never does.
struct Atom {
    Scalar weight;
    Vector support;
};

struct CpFactorization {
    std::size_t dim = 0;
    std::vector<Atom> atoms;
    bool integral = false;

    /// Radicand of the scalar field the atoms live in (0 for Q).
    long radicand() const;
    /// Appends an atom, dropping it if the weight or support is zero.
    void add(Scalar weight, Vector support);
    /// Appends another factorization's atoms with indices shifted by `offset`.
    void embed(const CpFactorization& inner, std::size_t offset);
};

SymMatrix gram(const CpFactorization& f);

struct Discrepancy {
    std::size_t i = 0;
    std::size_t j = 0;
    Scalar expected;
    Scalar got;
};

struct KernelViolation {
    std::size_t atom = 0;
    std::size_t kernel_vector = 0;
    Scalar product;
};

struct VerificationReport {
    bool gram_matches = false;
    bool columns_nonneg = false;
    bool kernel_orthogonal = false;
    /// Set only for factorizations flagged integral.
    bool integrality_ok = true;
    std::optional<Discrepancy> first_discrepancy;
    std::optional<KernelViolation> first_kernel_violation;
    std::optional<std::size_t> first_negative_atom;

    bool passed() const { return gram_matches && columns_nonneg && kernel_orthogonal && integrality_ok; }
};

/// Exact verification of A = sum of atoms, atom nonnegativity, and
/// support^T v = 0 for every atom and every kernel vector v.
VerificationReport verify(const SymMatrix& a, const CpFactorization& f, const std::vector<Vector>& kernel);

struct DnnVerdict {
    enum class Kind { dnn, not_nonneg, not_psd };
    Kind kind = Kind::dnn;
    std::size_t i = 0;
    std::size_t j = 0;
    Vector witness;
    bool is_dnn() const { return kind == Kind::dnn; }
};

DnnVerdict dnn_check(const SymMatrix& a);

struct GraphVerdict {
    enum class Kind { ok, odd_cycle, resource_limit };
    Kind kind = Kind::ok;
    std::vector<std::size_t> cycle;
};

struct CycleSearchOptions {
    /// Above this dimension a non-bipartite pattern is only searched up to
    /// `node_budget` DFS steps; if no cycle shows up the verdict is resource_limit.
    std::size_t max_dim = 12;
    std::size_t node_budget = 200000;
};

/// Looks for an odd cycle of length >= 5 in the off-diagonal nonzero pattern.
GraphVerdict cp_graph_check(const SymMatrix& a, const CycleSearchOptions& opts = {});

/// True iff A = [D1 C; C^T D2] with D1, D2 diagonal, C >= 0, A w = lambda w,
/// lambda >= 0, w > 0 on the first m coordinates and w < 0 on the rest.
bool special_hypothesis_check(const SymMatrix& a, std::size_t m, const Vector& w, const Scalar& lambda);

struct NumericFactor {
    /// rows x columns, B with A ~ B B^T
    std::vector<std::vector<double>> b;
    double max_residual = 0.0;
    double max_entry = 0.0;
};

/// Rounds sqrt(weight) * support to `digits` decimals and reports the
/// largest entrywise |gram - B B^T|.
NumericFactor to_numeric(const CpFactorization& f, int digits);

}  // namespace edmcp
