#pragma once

#include "edmcp/matrix.hpp"

#include <cstdint>
#include <vector>

namespace edmcp {

/// Distinct points on the real line.
class PointSet {
public:
    /// Throws std::invalid_argument on duplicate points.
    explicit PointSet(std::vector<Rational> points);
    const std::vector<Rational>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Rational> points_;
};

/// Nonzero eigenvalues of A_n. lambda1/lambda2 live in Q(sqrt s) for an
/// n-dependent radicand s; lambda3 is rational.
struct SpectrumTriple {
    Scalar lambda1;
    Scalar lambda2;
    Rational lambda3;
    std::size_t nullity = 0;
};

/// (A_n)_{ij} = (j - i)^2, the distance matrix of {1, ..., n}. n >= 2.
SymMatrix build_An(int n);

/// (a_j - a_i)^2 over an arbitrary point set.
SymMatrix build_edm(const PointSet& points);

/// Closed-form spectrum of A_n; n >= 3 (at n = 2 lambda2 degenerates to 0).
SpectrumTriple spectrum(int n);

/// w_i = n + 1 - 2i, the eigenvector for lambda3. Shared null vector of B_n.
Vector w_vector(int n);

/// v(j) = e_j - 3 e_{j+1} + 3 e_{j+2} - e_{j+3}, j = 1..n-3. Empty for n < 4.
std::vector<Vector> null_basis(int n);

/// Anti-diagonal permutation K_n.
SymMatrix reversal(int n);

Vector reversed(const Vector& v);

/// f(n) = n(n^2 - 1)/6, the smallest shift making A_n + f(n) I PSD.
Rational f_min(int n);
/// g_D(n) = sum_{j<n} j^2, the smallest shift making A_n diagonally dominant.
Rational g_diag(int n);
/// Jordan totient J_2(k) = k^2 prod_{p | k} (1 - 1/p^2), by trial division.
Rational jordan_totient2(std::int64_t k);
std::int64_t jordan_totient2_int(std::int64_t k);
/// g_J(n) = sum_{k=1}^{n-1} J_2(k).
Rational g_jordan(int n);

/// B_n = A_n + f(n) I.
SymMatrix build_Bn(int n);

}  // namespace edmcp
