#pragma once

#include "edmcp/scalar.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edmcp {

using Vector = std::vector<Scalar>;

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t a, std::size_t b, const std::string& where);
};

/// Dense symmetric matrix over Scalar. Writes go to both (i,j) and (j,i),
/// so the symmetry invariant cannot be broken through the public interface.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static SymMatrix identity(std::size_t dim);
    static SymMatrix from_function(std::size_t dim, const std::function<Scalar(std::size_t, std::size_t)>& f);
    /// Row-major n*n entries; throws std::invalid_argument if they are not symmetric.
    static SymMatrix from_entries(std::size_t dim, std::vector<Scalar> entries);

    std::size_t dim() const { return dim_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);

    /// Subtracts or adds weight * c c^T, touching only the nonzero entries of c.
    void add_rank_one(const Scalar& weight, const Vector& c);

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    SymMatrix scaled(const Scalar& s) const;
    SymMatrix plus_identity(const Scalar& s) const;

    Vector operator*(const Vector& v) const;

    /// Congruence P^T A P for a symmetric P (e.g. the reversal matrix).
    SymMatrix congruence(const SymMatrix& p) const;

    /// Principal submatrix on the given indices, in order.
    SymMatrix principal(const std::vector<std::size_t>& idx) const;

    /// Largest radicand appearing in any entry (0 if all rational).
    long radicand() const;

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

/// Exact entrywise equality; throws DimensionMismatch on differing sizes.
bool mat_equal(const SymMatrix& a, const SymMatrix& b);

Scalar dot(const Vector& a, const Vector& b);
Scalar quadratic_form(const SymMatrix& a, const Vector& v);
Vector scaled(const Vector& v, const Scalar& s);
Vector unit_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vector& v);

/// Exact rank by Gaussian elimination (works for indefinite matrices).
std::size_t exact_rank(const SymMatrix& a);

}  // namespace edmcp
