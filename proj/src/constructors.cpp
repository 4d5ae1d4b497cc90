#include "edmcp/constructors.hpp"

#include "edmcp/edm.hpp"

#include <string>

namespace edmcp {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

std::string at(std::size_t i, std::size_t j) { return "(" + pos(i) + "," + pos(j) + ")"; }

}  // namespace

// ---------------------------------------------------------------------------
// L R L^T

std::array<std::array<std::int64_t, 3>, 3> lrl_middle() { return {{{0, 1, 1}, {1, -6, 1}, {1, 1, 0}}}; }

SymMatrix LrlPair::product() const {
    const std::size_t n = l.size();
    return SymMatrix::from_function(n, [&](std::size_t i, std::size_t j) {
        std::int64_t s = 0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) s += l[i][a] * r[a][b] * l[j][b];
        return Scalar(static_cast<long>(s));
    });
}

LrlPair lrl_factorize(int n) {
    if (n < 3) throw std::invalid_argument("L R L^T factorization requires n >= 3");
    LrlPair out;
    out.r = lrl_middle();
    out.l.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(3, 0));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) {
            const std::int64_t k = n - 3 + c;
            if (k < i) continue;
            const std::int64_t top = k - i + 2;
            out.l[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = top * (top - 1) / 2;
        }
    return out;
}

// ---------------------------------------------------------------------------
// diagonally dominant baseline

CpFactorization dd_factorize(const SymMatrix& a) {
    const std::size_t n = a.dim();
    CpFactorization f{n, {}, false};
    std::vector<Scalar> surplus(n);
    for (std::size_t i = 0; i < n; ++i) {
        surplus[i] = a(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j).sign() < 0) throw std::invalid_argument("matrix has a negative entry at " + at(i, j));
            if (j != i) surplus[i] -= a(i, j);
        }
        if (surplus[i].sign() < 0)
            throw std::invalid_argument("row " + pos(i) + " is not diagonally dominant (short by " +
                                        to_string(-surplus[i]) + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector c(n);
            c[i] = 1;
            c[j] = 1;
            f.add(a(i, j), std::move(c));
        }
    for (std::size_t i = 0; i < n; ++i) f.add(surplus[i], unit_vector(n, i));
    return f;
}

// ---------------------------------------------------------------------------
// bipartite block with a sign-split eigenvector

CpFactorization bipartite_edge_factorize(const SymMatrix& a, std::size_t m, const Vector& w, const Scalar& lambda) {
    if (!special_hypothesis_check(a, m, w, lambda))
        throw std::invalid_argument("matrix does not have the bipartite block form with a sign-split eigenvector");
    const std::size_t n = a.dim();
    CpFactorization f{n, {}, false};
    // D1 w1 = lambda w1 + C w2 and D2 w2 = lambda w2 + C^T w1 (w2 = -w on the
    // second block) make the edge atoms reproduce the diagonal exactly.
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = m; y < n; ++y) {
            if (a(x, y).is_zero()) continue;
            const Scalar w1 = w[x];
            const Scalar w2 = -w[y];
            Vector c(n);
            c[x] = Scalar(1) / w1;
            c[y] = Scalar(1) / w2;
            f.add(a(x, y) * w1 * w2, std::move(c));
        }
    if (lambda.sign() > 0)
        for (std::size_t i = 0; i < n; ++i) f.add(lambda, unit_vector(n, i));
    return f;
}

// ---------------------------------------------------------------------------
// arrow and double arrow

ShiftFn scaled_min_shift(Scalar q) {
    return [q = std::move(q)](int k) { return q * Scalar(f_min(k)); };
}

SymMatrix build_Rn(int n, const ShiftFn& g) {
    if (n < 2) throw std::invalid_argument("R_n requires n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n);
    const Scalar step = g(n) - g(n - 1);
    SymMatrix r(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        const long d = static_cast<long>(dim - 1 - i);
        r.set(i, i, step);
        r.set(i, dim - 1, Scalar(d * d));
    }
    r.set(dim - 1, dim - 1, g(n));
    return r;
}

CpFactorization arrow_factorize(const SymMatrix& r) {
    const std::size_t n = r.dim();
    if (n == 0) throw std::invalid_argument("empty arrow matrix");
    const std::size_t hub = n - 1;
    for (std::size_t i = 0; i < hub; ++i) {
        for (std::size_t j = i + 1; j < hub; ++j)
            if (!r(i, j).is_zero()) throw std::invalid_argument("not an arrow matrix: nonzero at " + at(i, j));
        if (r(i, i).sign() <= 0) throw std::invalid_argument("arrow diagonal must be positive at " + at(i, i));
        if (r(i, hub).sign() < 0) throw std::invalid_argument("arrow arm must be nonnegative at " + at(i, hub));
    }
    CpFactorization f{n, {}, false};
    Scalar remainder = r(hub, hub);
    for (std::size_t i = 0; i < hub; ++i) {
        const Scalar& d = r(i, i);
        const Scalar& v = r(i, hub);
        Vector c(n);
        c[i] = 1;
        c[hub] = v / d;
        remainder -= v * v / d;
        f.add(d, std::move(c));
    }
    if (remainder.sign() < 0)
        throw NotCertifiedError("arrow Schur remainder is negative: " + to_string(remainder), remainder);
    f.add(remainder, unit_vector(n, hub));
    return f;
}

SymMatrix build_Qn(int n, const ShiftFn& g) {
    if (n < 3) throw std::invalid_argument("Q_n requires n >= 3");
    const std::size_t dim = static_cast<std::size_t>(n);
    const std::size_t last = dim - 1;
    const Scalar gn = g(n);
    const Scalar delta = gn - g(n - 2);
    SymMatrix q(dim);
    q.set(0, 0, gn);
    q.set(last, last, gn);
    q.set(0, last, Scalar(long(n - 1) * long(n - 1)));
    for (std::size_t i = 1; i < last; ++i) {
        const long u = static_cast<long>(i);
        const long v = static_cast<long>(last - i);
        q.set(i, i, delta);
        q.set(0, i, Scalar(u * u));
        q.set(i, last, Scalar(v * v));
    }
    return q;
}

CpFactorization double_arrow_factorize(const SymMatrix& q) {
    const std::size_t n = q.dim();
    if (n < 2) throw std::invalid_argument("double arrow requires dimension >= 2");
    const std::size_t last = n - 1;
    for (std::size_t i = 1; i < last; ++i) {
        for (std::size_t j = i + 1; j < last; ++j)
            if (!q(i, j).is_zero()) throw std::invalid_argument("not a double arrow: nonzero at " + at(i, j));
        if (q(i, i).sign() <= 0) throw std::invalid_argument("double-arrow middle diagonal must be positive at " + at(i, i));
        if (q(0, i).sign() < 0 || q(i, last).sign() < 0)
            throw std::invalid_argument("double-arrow arms must be nonnegative at row " + pos(i));
    }
    if (q(0, last).sign() < 0) throw std::invalid_argument("double-arrow corner must be nonnegative");

    CpFactorization f{n, {}, false};
    Scalar a = q(0, 0);
    Scalar b = q(last, last);
    Scalar r = q(0, last);
    for (std::size_t i = 1; i < last; ++i) {
        const Scalar& d = q(i, i);
        const Scalar& u = q(0, i);
        const Scalar& v = q(i, last);
        Vector c(n);
        c[0] = u / d;
        c[i] = 1;
        c[last] = v / d;
        a -= u * u / d;
        b -= v * v / d;
        r -= u * v / d;
        f.add(d, std::move(c));
    }
    // Remaining 2x2 block on the two hubs: [[a, r], [r, b]].
    if (r.sign() < 0) throw NotCertifiedError("double-arrow hub remainder off-diagonal is negative: " + to_string(r), r);
    if (a.sign() < 0) throw NotCertifiedError("double-arrow hub remainder (1,1) is negative: " + to_string(a), a);
    if (b.sign() < 0) throw NotCertifiedError("double-arrow hub remainder (n,n) is negative: " + to_string(b), b);
    const Scalar det = a * b - r * r;
    if (det.sign() < 0) throw NotCertifiedError("double-arrow hub remainder is not PSD, det = " + to_string(det), det);
    if (a.sign() > 0) {
        Vector c(n);
        c[0] = 1;
        c[last] = r / a;
        f.add(a, std::move(c));
        f.add(det / a, unit_vector(n, last));
    } else {
        f.add(b, unit_vector(n, last));
    }
    return f;
}

CpFactorization inductive_factorize(int n, const Scalar& q) {
    if (n < 2) throw std::invalid_argument("inductive factorization requires n >= 2");
    if (q < Scalar(1)) throw std::invalid_argument("inductive factorization requires q >= 1");
    const std::size_t dim = static_cast<std::size_t>(n);
    if (n <= 5) {
        CpFactorization f = optimal_factorize(n);
        const Scalar surplus = (q - Scalar(1)) * Scalar(f_min(n));
        for (std::size_t i = 0; i < dim; ++i) f.add(surplus, unit_vector(dim, i));
        return f;
    }
    CpFactorization f{dim, {}, false};
    f.embed(inductive_factorize(n - 2, q), 1);
    for (auto& atom : double_arrow_factorize(build_Qn(n, scaled_min_shift(q))).atoms) f.atoms.push_back(std::move(atom));
    return f;
}

// ---------------------------------------------------------------------------
// optimal shift

SymMatrix OptimalPieces::bipartite_block() const {
    if (n % 2 == 0) return residual;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < residual.dim(); ++i)
        if (i != static_cast<std::size_t>(m)) keep.push_back(i);
    return residual.principal(keep);
}

std::vector<std::vector<Scalar>> OptimalPieces::c_block() const {
    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t offset = n % 2 == 0 ? mm : mm + 1;
    std::vector<std::vector<Scalar>> c(mm, std::vector<Scalar>(mm));
    for (std::size_t x = 0; x < mm; ++x)
        for (std::size_t y = 0; y < mm; ++y) c[x][y] = residual(x, offset + y);
    return c;
}

std::vector<Atom> OptimalPieces::all_atoms() const {
    std::vector<Atom> out = atoms_v;
    out.insert(out.end(), atoms_vprime.begin(), atoms_vprime.end());
    if (atom_t) out.push_back(*atom_t);
    out.insert(out.end(), atoms_z.begin(), atoms_z.end());
    return out;
}

namespace {

// Sparse atom builder over 1-based positions.
Atom make_atom(std::size_t n, std::initializer_list<std::pair<int, Scalar>> entries) {
    Atom atom{Scalar(1), Vector(n)};
    for (const auto& [p, v] : entries) atom.support.at(static_cast<std::size_t>(p - 1)) += v;
    return atom;
}

Atom mirrored(const Atom& a) { return Atom{a.weight, reversed(a.support)}; }

// Shared post-conditions: every atom is orthogonal to w(n), and the residual
// is bipartite between the first m and last m coordinates (with an isolated
// middle coordinate when n is odd), nonnegative, and annihilates w(n).
void check_pieces(const OptimalPieces& p) {
    const Vector w = w_vector(p.n);
    for (const auto& atom : p.all_atoms())
        if (!dot(atom.support, w).is_zero()) throw InternalContradiction("atom not orthogonal to w(n)");
    const std::size_t n = static_cast<std::size_t>(p.n);
    const std::size_t m = static_cast<std::size_t>(p.m);
    auto block = [&](std::size_t i) { return i < m ? 0 : (i >= n - m ? 2 : 1); };
    for (std::size_t i = 0; i < n; ++i) {
        if (p.residual(i, i).sign() < 0) throw InternalContradiction("negative residual diagonal at " + at(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar& e = p.residual(i, j);
            const bool cross = block(i) == 0 && block(j) == 2;
            if (cross ? e.sign() < 0 : !e.is_zero())
                throw InternalContradiction("residual violates the block pattern at " + at(i, j) + ": " + to_string(e));
        }
    }
    if (!is_zero(p.residual * w)) throw InternalContradiction("residual does not annihilate w(n)");
}

SymMatrix subtract_atoms(SymMatrix b, const std::vector<Atom>& atoms) {
    for (const auto& atom : atoms) b.add_rank_one(-atom.weight, atom.support);
    return b;
}

}  // namespace

OptimalPieces optimal_even(int m) {
    if (m < 1) throw std::invalid_argument("even optimal construction requires m >= 1");
    OptimalPieces p;
    p.m = m;
    p.n = 2 * m;
    const std::size_t n = static_cast<std::size_t>(p.n);
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int k = (m + j) / 2 + 1 - i;
            if (k < 1 || k > m) throw InternalContradiction("column slot k out of range");
            const Scalar alpha = Scalar(make_rational(2 * (2 * m - i - j + 1), 2 * k - 1));
            const Scalar s(long(j - i));
            p.atoms_v.push_back(make_atom(n, {{i, s}, {j, s}, {m + k, s * alpha}}));
        }
    for (const auto& a : p.atoms_v) p.atoms_vprime.push_back(mirrored(a));
    p.residual = subtract_atoms(build_Bn(p.n), p.all_atoms());
    check_pieces(p);
    return p;
}

OptimalPieces optimal_odd(int m) {
    if (m < 2) throw std::invalid_argument("odd optimal construction requires m >= 2");
    OptimalPieces p;
    p.m = m;
    p.n = 2 * m + 1;
    const std::size_t n = static_cast<std::size_t>(p.n);
    // The pair (m-1, m) and its mirror are left to t.
    for (int i = 1; i <= m - 2; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int k = (m + j + 1) / 2 - i;
            if (k < 1 || k > m) throw InternalContradiction("column slot k out of range");
            const Scalar alpha = Scalar(make_rational(2 * m - i - j + 2, k));
            const Scalar s(long(j - i));
            p.atoms_v.push_back(make_atom(n, {{i, s}, {j, s}, {m + 1 + k, s * alpha}}));
        }
    for (const auto& a : p.atoms_v) p.atoms_vprime.push_back(mirrored(a));
    p.atom_t = make_atom(n, {{m - 1, 1}, {m, 1}, {m + 2, 1}, {m + 3, 1}});
    for (int i = 1; i <= m; ++i) {
        const Scalar s(long(m + 1 - i));
        p.atoms_z.push_back(make_atom(n, {{i, s}, {m + 1, s}, {2 * m + 2 - i, s}}));
    }
    const Rational beta = make_rational(long(m) * (m + 1) * (2 * m + 1), 6);
    p.alpha = Scalar(Rational(f_min(p.n) - beta));
    if (p.alpha->sign() <= 0) throw InternalContradiction("middle surplus alpha is not positive");
    p.residual = subtract_atoms(build_Bn(p.n), p.all_atoms());
    const std::size_t mid = static_cast<std::size_t>(m);
    if (!(p.residual(mid, mid) == *p.alpha)) throw InternalContradiction("middle residual differs from alpha");
    check_pieces(p);
    return p;
}

CpFactorization optimal_factorize(int n) {
    if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n);
    CpFactorization f{dim, {}, false};
    if (n == 3) {
        f.add(1, Vector{1, 1, 1});
        f.add(3, Vector{1, 0, 1});
        f.add(3, Vector{0, 1, 0});
    } else if (n % 2 == 0) {
        const OptimalPieces p = optimal_even(n / 2);
        f.atoms = p.all_atoms();
        const CpFactorization edges = bipartite_edge_factorize(p.residual, dim / 2, w_vector(n), 0);
        f.atoms.insert(f.atoms.end(), edges.atoms.begin(), edges.atoms.end());
    } else {
        const OptimalPieces p = optimal_odd(n / 2);
        const std::size_t mid = dim / 2;
        f.atoms = p.all_atoms();
        Vector w = w_vector(n);
        w.erase(w.begin() + static_cast<long>(mid));
        const CpFactorization edges = bipartite_edge_factorize(p.bipartite_block(), mid, w, 0);
        for (const auto& atom : edges.atoms) {
            Vector c = atom.support;
            c.insert(c.begin() + static_cast<long>(mid), Scalar(0));
            f.atoms.push_back({atom.weight, std::move(c)});
        }
        f.add(*p.alpha, unit_vector(dim, mid));
    }
    if (!(gram(f) == build_Bn(n))) throw InternalContradiction("optimal factorization does not reproduce B_n");
    return f;
}

}  // namespace edmcp
